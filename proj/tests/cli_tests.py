#!/usr/bin/env python3
"""End-to-end CLI checks: schemas, exit codes, golden files, determinism."""

import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
DATA = sys.argv[2]
FAILURES = []


def run(*args, env_extra=None, expect=0):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=env)
    if expect is not None and proc.returncode != expect:
        FAILURES.append(f"{args}: exit {proc.returncode} != {expect}\n{proc.stderr}")
    return proc


def check(cond, message):
    if not cond:
        FAILURES.append(message)


def main():
    tmp = tempfile.mkdtemp(prefix="modwedge_cli_")

    # golden classification table, byte-identical
    table = run("rootdata", "--table").stdout
    with open(os.path.join(DATA, "classification_table.csv")) as f:
        golden = f.read()
    check(table == golden, "rootdata --table does not match the golden file")

    # rootdata query is integer-exact
    q = json.loads(run("rootdata", "--type", "A", "--rank", "4").stdout)
    check(q["euler_indices"] == [1, 2, 3, 4], "A4 euler indices wrong")
    check(q["symmetric_indices"] == [], "A4 has no symmetric Euler element")
    q = json.loads(run("rootdata", "--type", "D", "--rank", "4").stdout)
    check(q["symmetric_indices"] == [1, 3, 4], "D4 symmetric indices wrong")

    # euler subcommand
    e = json.loads(run("euler", "--algebra", "sl3", "--element", "h1").stdout)
    check(e["is_euler"] is True and e["symmetric"] is False, "sl3 h1 report wrong")
    e = json.loads(run("euler", "--algebra", "sl4", "--element", "h2").stdout)
    check(e["symmetric"] is True, "sl4 h2 should be symmetric")
    e = json.loads(run("euler", "--algebra", "oscillator", "--element", "h").stdout)
    check(e["is_euler"] is True, "oscillator h should be Euler")
    run("euler", "--algebra", "nosuch", "--element", "h1", expect=1)

    # custom algebra from JSON: the split oscillator inside sl3
    def mat(rows):
        return {"rows": len(rows), "cols": len(rows[0]),
                "data": [x for r in rows for x in r]}
    osc = {"name": "custom_oscillator", "matrix_size": 3,
           "basis": [mat([[0, 0, 1], [0, 0, 0], [0, 0, 0]]),
                     mat([[0, 1, 0], [0, 0, 0], [0, 0, 0]]),
                     mat([[0, 0, 0], [0, 0, 1], [0, 0, 0]]),
                     mat([[1 / 3, 0, 0], [0, -2 / 3, 0], [0, 0, 1 / 3]])]}
    osc_path = os.path.join(tmp, "osc.json")
    osc_h_path = os.path.join(tmp, "osc_h.json")
    with open(osc_path, "w") as f:
        json.dump(osc, f)
    with open(osc_h_path, "w") as f:
        json.dump(mat([[1 / 3, 0, 0], [0, -2 / 3, 0], [0, 0, 1 / 3]]), f)
    e = json.loads(run("euler", "--algebra-file", osc_path,
                       "--element", osc_h_path).stdout)
    check(e["algebra"] == "custom_oscillator", "custom algebra name echoed")
    check(e["is_euler"] is True and e["symmetric"] is False,
          "oscillator Euler element is not symmetric")
    run("euler", "--no-such-flag", expect=1)  # usage errors are validation errors
    run("nosubcommand", expect=1)

    # modular from a frame file: V = R^2 gives delta = 1
    frame = {
        "ambient_dim": 2,
        "columns": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]],
    }
    frame_path = os.path.join(tmp, "frame.json")
    with open(frame_path, "w") as f:
        json.dump(frame, f)
    m = json.loads(run("modular", "--from-frame", frame_path).stdout)
    check(abs(m["delta"]["data"][0][0] - 1.0) < 1e-12, "delta(R^2) != 1")
    check(m["modular_relation_residual"] < 1e-12, "modular relation residual")

    # wedge membership and validation failures
    w = json.loads(run("wedge", "--space", "ds2", "--point", "0,1,0").stdout)
    check(w["inside"] is True, "dS2 base point inside")
    run("wedge", "--space", "ds2", "--point", "0,5,0", expect=1)  # off surface
    w = json.loads(run("wedge", "--space", "embed", "--point", "1,0.2,0,0").stdout)
    check(w["inside"] is True, "timelike vector embeds into the wedge")
    check(abs(w["quadric_defect"]) < 1e-12, "embedding misses the quadric")

    # semigroup: boost compresses the Rindler wedge, rotation does not
    boost = {"rows": 4, "cols": 4, "data": [0.0] * 16}
    import math
    ch, sh = math.cosh(0.7), math.sinh(0.7)
    mat = [[ch, sh, 0, 0], [sh, ch, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    boost["data"] = [x for row in mat for x in row]
    boost_path = os.path.join(tmp, "boost.json")
    with open(boost_path, "w") as f:
        json.dump(boost, f)
    s = json.loads(
        run("semigroup", "--mode", "rindler", "--translation", "0,1,0,0",
            "--lorentz", boost_path).stdout)
    check(s["member"] is True, "boost+edge translation should compress")
    s = json.loads(
        run("semigroup", "--mode", "rindler", "--translation", "1,0,0,0",
            "--lorentz", boost_path).stdout)
    check(s["member"] is False, "timelike translation must not compress")

    sl2el = {"rows": 2, "cols": 2,
             "data": [x for row in [[1.0, 0.5], [0.0, 1.0]] for x in row]}
    sl2_path = os.path.join(tmp, "sl2.json")
    with open(sl2_path, "w") as f:
        json.dump(sl2el, f)
    s = json.loads(run("semigroup", "--mode", "sl2", "--element", sl2_path).stdout)
    check(s["semigroup_member"] is True, "exp(C_+) lies in S(h, C)")
    check(s["wedge_member"] is False, "boundary element is not in the open wedge")

    # net scenario end to end
    p = 0.4
    scenario = {
        "generator": {"rows": 2, "cols": 2,
                      "data": [[p, 0.0], [0.0, 0.0], [0.0, 0.0], [-p, 0.0]]},
        "j_matrix": {"rows": 2, "cols": 2,
                     "data": [[0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [0.0, 0.0]]},
        "elements": [
            {"label": "e",
             "matrix": {"rows": 2, "cols": 2,
                        "data": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]},
             "in_SW": True},
            {"label": "flow",
             "matrix": {"rows": 2, "cols": 2,
                        "data": [[math.cos(p), math.sin(p)], [0.0, 0.0],
                                 [0.0, 0.0], [math.cos(p), -math.sin(p)]]},
             "in_SW": True},
        ],
        "regions": [
            {"label": "W", "covered_by": ["e", "flow"], "contains": ["e", "flow"]},
            {"label": "O", "covered_by": ["e", "flow"], "contains": []},
        ],
    }
    scen_path = os.path.join(tmp, "scenario.json")
    with open(scen_path, "w") as f:
        json.dump(scenario, f)
    n = json.loads(run("net", "--scenario", scen_path).stdout)
    check(n["bw_holds"] is True, "modular flow satisfies the BW inclusion")
    check(len(n["net_max"]["W"]["columns"]) == 2, "net_max(W) should be standard")
    check(len(n["net_min"]["O"]["columns"]) == 0, "empty sum should be {0}")

    # fock numbers
    f = json.loads(
        run("fock", "--modes", "1", "--degree", "16", "--x", "0.3,0.1").stdout)
    check(f["weyl_paths_distance"] < 1e-8, "weyl paths disagree")
    check(f["weyl_relation_residual"] < 1e-8, "weyl relation residual too large")

    # SVG plot: deterministic, correct orbit count
    svg1 = run("plot", "--orbits", "6", "--out", "-").stdout
    svg2 = run("plot", "--orbits", "6", "--out", "-").stdout
    check(svg1 == svg2, "plot output must be byte-identical across runs")
    check(svg1.count("<polyline") == 6, "plot must contain the configured orbits")
    check(svg1.startswith("<svg"), "plot must be an SVG document")

    # seeding: MODWEDGE_SEED overrides and is deterministic
    a = run("plot", "--orbits", "4", "--out", "-", env_extra={"MODWEDGE_SEED": "9"})
    b = run("plot", "--seed", "9", "--orbits", "4", "--out", "-")
    check(a.stdout == b.stdout, "MODWEDGE_SEED must match --seed")
    c = run("plot", "--seed", "10", "--orbits", "4", "--out", "-")
    check(a.stdout != c.stdout, "different seeds must vary the orbits")

    # trajectory CSV export: on-quadric, inside the wedge, deterministic
    csv_path = os.path.join(tmp, "orbits.csv")
    run("plot", "--orbits", "5", "--csv-out", csv_path, "--out",
        os.path.join(tmp, "orbits.svg"))
    with open(csv_path) as f:
        rows = f.read().strip().splitlines()
    check(rows[0] == "orbit,t,x0,x1,x2", "trajectory CSV header")
    orbit_ids = set()
    for row in rows[1:]:
        k, t, x0, x1, x2 = row.split(",")
        orbit_ids.add(k)
        x0, x1, x2 = float(x0), float(x1), float(x2)
        check(abs(x0 * x0 - x1 * x1 - x2 * x2 + 1.0) < 1e-8,
              "orbit point off the quadric")
        check(x1 > abs(x0), "orbit point escaped the wedge")
    check(len(orbit_ids) == 5, "trajectory CSV must cover every orbit")

    # acceptance criteria 1-13 through the CLI; byte-identical reports (crit 14)
    r1 = run("verify", "--all")
    r2 = run("verify", "--all")
    check(r1.stdout == r2.stdout, "verify --all reports must be byte-identical")
    check("all criteria passed" in r1.stdout, "verify --all must pass")
    check(r1.stdout.count("PASS") == 13, "verify --all must run 13 criteria")

    if FAILURES:
        print("CLI TEST FAILURES:")
        for f in FAILURES:
            print(" -", f)
        sys.exit(1)
    print("cli_tests: all checks passed")


if __name__ == "__main__":
    main()
