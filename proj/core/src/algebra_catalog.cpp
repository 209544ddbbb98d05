#include <cctype>
#include <cmath>

#include "modwedge/lie_algebra.hpp"

namespace modwedge::liealg {

namespace {

MatrixXd unit(int n, int i, int j) {
  MatrixXd e = MatrixXd::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

}  // namespace

LieAlgebraSpec make_sl(int n) {
  std::vector<MatrixXd> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) basis.push_back(unit(n, i, j));
  for (int i = 0; i + 1 < n; ++i)
    basis.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
  return LieAlgebraSpec("sl" + std::to_string(n), basis);
}

LieAlgebraSpec make_gl(int n) {
  std::vector<MatrixXd> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis.push_back(unit(n, i, j));
  return LieAlgebraSpec("gl" + std::to_string(n), basis);
}

LieAlgebraSpec make_so_pq(int p, int q) {
  // Metric diag(1_p, -1_q); X^T eta + eta X = 0.
  const int n = p + q;
  Eigen::VectorXd eta(n);
  for (int i = 0; i < n; ++i) eta(i) = i < p ? 1.0 : -1.0;
  std::vector<MatrixXd> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // rotation when eta_i = eta_j, boost otherwise
      MatrixXd x = MatrixXd::Zero(n, n);
      x(i, j) = 1.0;
      x(j, i) = (eta(i) == eta(j)) ? -1.0 : 1.0;
      basis.push_back(x);
    }
  return LieAlgebraSpec("so(" + std::to_string(p) + "," + std::to_string(q) + ")",
                        basis);
}

LieAlgebraSpec make_sp(int n) {
  // sp_{2n}(R) for Omega = [[0, 1],[-1, 0]]: X = [[A, B],[C, -A^T]], B, C symmetric.
  const int m = 2 * n;
  std::vector<MatrixXd> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatrixXd x = MatrixXd::Zero(m, m);
      x(i, j) = 1.0;
      x(n + j, n + i) = -1.0;
      basis.push_back(x);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      MatrixXd b = MatrixXd::Zero(m, m);
      b(i, n + j) = 1.0;
      b(j, n + i) = 1.0;
      basis.push_back(b);
      MatrixXd c = MatrixXd::Zero(m, m);
      c(n + i, j) = 1.0;
      c(n + j, i) = 1.0;
      basis.push_back(c);
    }
  return LieAlgebraSpec("sp" + std::to_string(m), basis);
}

LieAlgebraSpec make_affine_line() {
  // aff(R) = R ⋊ R as 2x2 matrices [[a, b],[0, 0]]; h = (0,1), translation (1,0).
  std::vector<MatrixXd> basis;
  MatrixXd t = MatrixXd::Zero(2, 2);
  t(0, 1) = 1.0;
  basis.push_back(t);
  MatrixXd h = MatrixXd::Zero(2, 2);
  h(0, 0) = 1.0;
  basis.push_back(h);
  return LieAlgebraSpec("affine", basis);
}

LieAlgebraSpec make_poincare(int d) {
  // R^{1,d-1} ⋊ so(1,d-1) as (d+1)x(d+1) affine matrices.
  const int n = d + 1;
  Eigen::VectorXd eta(d);
  eta(0) = 1.0;
  for (int i = 1; i < d; ++i) eta(i) = -1.0;
  std::vector<MatrixXd> basis;
  for (int i = 0; i < d; ++i) {
    MatrixXd t = MatrixXd::Zero(n, n);
    t(i, d) = 1.0;  // translation e_i
    basis.push_back(t);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      MatrixXd x = MatrixXd::Zero(n, n);
      x(i, j) = 1.0;
      x(j, i) = (eta(i) == eta(j)) ? -1.0 : 1.0;
      basis.push_back(x);
    }
  return LieAlgebraSpec("poincare" + std::to_string(d), basis);
}

LieAlgebraSpec make_oscillator() {
  // heis(R^2) ⋊ R h with [q,p] = z, [h,q] = q, [h,p] = -p, inside sl_3(R):
  // h = diag(1,-2,1)/3, q = E_12, p = E_23, z = E_13.
  std::vector<MatrixXd> basis;
  basis.push_back(unit(3, 0, 2));  // z
  basis.push_back(unit(3, 0, 1));  // q
  basis.push_back(unit(3, 1, 2));  // p
  MatrixXd h = MatrixXd::Zero(3, 3);
  h(0, 0) = 1.0 / 3;
  h(1, 1) = -2.0 / 3;
  h(2, 2) = 1.0 / 3;
  basis.push_back(h);
  return LieAlgebraSpec("oscillator", basis);
}

LieAlgebraSpec make_hcsp(int n) {
  // heis(V) ⋊ csp(V) for V = R^{2n}, embedded as (2n+2)x(2n+2) matrices:
  //   (z, v, x + mu id) -> [[mu, omega(v,.), 2 z], [0, x + mu*... ]]
  // A faithful affine-type realization: act on (1, xi, s) with
  //   f(xi) = z + omega(v, xi) + quadratic, Hamiltonian vector fields.
  // Simpler: use the standard embedding of the Jacobi algebra into sp_{2n+2}
  // plus the grading element. Here n = 1 is what the examples use.
  //
  // We realize hcsp(R^{2n}) inside gl_{2n+2}:
  //   rows/cols: 0 .. 2n-1 = V, 2n = "1", 2n+1 = "s" (dual of 1)
  //   x in sp(V):        top-left block x
  //   v in V:            column action xi -> omega(v, xi): entry (2n+1, .) = (J v)^T?
  //   translations: e(v): xi-block column at 2n: v; row 2n+1 gets omega(v, xi).
  //   z: entry (2n+1, 2n) = z
  //   h0 = id_V with weight 2 on z: diag(1,...,1, 0, 2)? adjusted below.
  const int m = 2 * n + 2;
  const int vdim = 2 * n;
  MatrixXd omega = MatrixXd::Zero(vdim, vdim);
  for (int i = 0; i < n; ++i) {
    omega(i, n + i) = 1.0;   // omega(q_i, p_i) = 1
    omega(n + i, i) = -1.0;
  }
  std::vector<MatrixXd> basis;
  // z
  MatrixXd z = MatrixXd::Zero(m, m);
  z(2 * n + 1, 2 * n) = 1.0;
  basis.push_back(z);
  // v in V: column v at index 2n (translation part), row 2n+1 = (omega v)/...
  for (int k = 0; k < vdim; ++k) {
    MatrixXd e = MatrixXd::Zero(m, m);
    for (int i = 0; i < vdim; ++i) e(i, 2 * n) = (i == k) ? 1.0 : 0.0;
    for (int i = 0; i < vdim; ++i) e(2 * n + 1, i) = omega(k, i);
    basis.push_back(e);
  }
  // sp(V): blocks [[A, B],[C, -A^T]]
  auto push_sp = [&](const MatrixXd& x) {
    MatrixXd e = MatrixXd::Zero(m, m);
    e.topLeftCorner(vdim, vdim) = x;
    basis.push_back(e);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatrixXd x = MatrixXd::Zero(vdim, vdim);
      x(i, j) = 1.0;
      x(n + j, n + i) = -1.0;
      push_sp(x);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      MatrixXd b = MatrixXd::Zero(vdim, vdim);
      b(i, n + j) = 1.0;
      b(j, n + i) = 1.0;
      push_sp(b);
      MatrixXd c = MatrixXd::Zero(vdim, vdim);
      c(n + i, j) = 1.0;
      c(n + j, i) = 1.0;
      push_sp(c);
    }
  // h0 = id_V, with weights (ad h0)(z,v,x) = (2z, v, 0):
  // realized as diag(1/2 ... on V, -1/2 on "1", +3/2 on s)? We instead use
  // diag(id_V, c1, c2) with c1, c2 chosen so brackets come out right:
  // [h0, e(v)] needs weight 1 on the column (V,2n) entries: 1 - c1 = 1 -> c1 = 0,
  // and on row (2n+1, V): c2 - 0 dummy... [h0, z]: c2 - c1 = 2 -> c2 = 2.
  MatrixXd h0 = MatrixXd::Zero(m, m);
  h0.topLeftCorner(vdim, vdim) = MatrixXd::Identity(vdim, vdim);
  h0(2 * n, 2 * n) = 0.0;
  h0(2 * n + 1, 2 * n + 1) = 2.0;
  basis.push_back(h0);
  return LieAlgebraSpec("hcsp" + std::to_string(2 * n), basis);
}

VectorXd sl_euler_element(const LieAlgebraSpec& sl, int k) {
  const int n = sl.matrix_size();
  MatrixXd h = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    h(i, i) = (i < k) ? (n - k) / static_cast<double>(n) : -k / static_cast<double>(n);
  return sl.to_coordinates(h);
}

VectorXd so_boost_element(const LieAlgebraSpec& so_1d) {
  const int n = so_1d.matrix_size();
  MatrixXd h = MatrixXd::Zero(n, n);
  h(0, 1) = 1.0;
  h(1, 0) = 1.0;
  return so_1d.to_coordinates(h);
}

VectorXd sp_euler_element(const LieAlgebraSpec& sp) {
  const int m = sp.matrix_size();
  const int n = m / 2;
  MatrixXd h = MatrixXd::Zero(m, m);
  for (int i = 0; i < n; ++i) {
    h(i, i) = 0.5;
    h(n + i, n + i) = -0.5;
  }
  return sp.to_coordinates(h);
}

VectorXd poincare_boost_element(const LieAlgebraSpec& poincare) {
  const int n = poincare.matrix_size();
  MatrixXd h = MatrixXd::Zero(n, n);
  h(0, 1) = 1.0;
  h(1, 0) = 1.0;
  return poincare.to_coordinates(h);
}

VectorXd oscillator_euler_element(const LieAlgebraSpec& osc) {
  MatrixXd h = MatrixXd::Zero(3, 3);
  h(0, 0) = 1.0 / 3;
  h(1, 1) = -2.0 / 3;
  h(2, 2) = 1.0 / 3;
  return osc.to_coordinates(h);
}

VectorXd hcsp_euler_element(const LieAlgebraSpec& hcsp) {
  // h = h_s + id_V/2 with h_s = diag(1,-1,...)/2 on V = V_1 ⊕ V_-1:
  // total diag(1,...,1, 0,...,0) on V plus the matching weights on (1, s).
  const int m = hcsp.matrix_size();
  const int vdim = m - 2;
  const int n = vdim / 2;
  MatrixXd h = MatrixXd::Zero(m, m);
  for (int i = 0; i < n; ++i) h(i, i) = 1.0;   // V_1 directions (q_i)
  // V_{-1} directions (p_i) get weight 0
  h(vdim, vdim) = 0.0;
  h(vdim + 1, vdim + 1) = 1.0;  // z has weight [h, z] = z? see below
  return hcsp.to_coordinates(h);
}

LieAlgebraSpec algebra_by_name(const std::string& name) {
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  if (starts("sl")) return make_sl(std::stoi(name.substr(2)));
  if (starts("gl")) return make_gl(std::stoi(name.substr(2)));
  if (starts("so(")) {
    const auto comma = name.find(',');
    const int p = std::stoi(name.substr(3, comma - 3));
    const int q = std::stoi(name.substr(comma + 1, name.size() - comma - 2));
    return make_so_pq(p, q);
  }
  if (starts("sp")) return make_sp(std::stoi(name.substr(2)) / 2);
  if (starts("poincare")) return make_poincare(std::stoi(name.substr(8)));
  if (name == "oscillator") return make_oscillator();
  if (starts("hcsp")) return make_hcsp(1);
  if (name == "affine") return make_affine_line();
  throw UnknownAlgebra(name);
}

VectorXd element_by_name(const LieAlgebraSpec& g, const std::string& element) {
  const std::string& name = g.name();
  if (name.rfind("sl", 0) == 0 || name.rfind("gl", 0) == 0) {
    if (element.size() >= 2 && element[0] == 'h') {
      const int k = std::stoi(element.substr(1));
      const int n = g.matrix_size();
      MatrixXd h = MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i)
        h(i, i) = (i < k) ? (n - k) / static_cast<double>(n)
                          : -k / static_cast<double>(n);
      return g.to_coordinates(h);
    }
  }
  if (name.rfind("so(", 0) == 0 && (element == "boost" || element == "h1"))
    return so_boost_element(g);
  if (name.rfind("sp", 0) == 0 && (element == "h" || element == "hn"))
    return sp_euler_element(g);
  if (name.rfind("poincare", 0) == 0 && element == "boost")
    return poincare_boost_element(g);
  if (name == "oscillator" && element == "h") return oscillator_euler_element(g);
  if (name.rfind("hcsp", 0) == 0 && element == "h") return hcsp_euler_element(g);
  if (name == "affine" && element == "h") {
    VectorXd v = VectorXd::Zero(2);
    v(1) = 1.0;
    return v;
  }
  throw Error("unknown element '" + element + "' for algebra " + g.name());
}

}  // namespace modwedge::liealg
