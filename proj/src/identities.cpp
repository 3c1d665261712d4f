#include <string>

#include "qweyl/weyl.hpp"

namespace qweyl {

namespace {

struct Builder {
  AlgebraDescriptor d;

  AlgebraElement y(int k) const { return gen_y(d, k); }
  AlgebraElement x(int k) const { return gen_x(d, k); }
  AlgebraElement R(int k, int p = 1) const { return gen_r(d, k, p); }
  /// Q_k, with Q_{n+1} = 1.
  AlgebraElement Q(int k) const { return q_elem(d, k); }
  AlgebraElement Qi(int k) const { return q_elem_inverse(d, k); }
  AlgebraElement rho(int k) const { return qweyl::rho(d, k); }
  AlgebraElement rhoi(int k) const { return rho_inverse(d, k); }
  AlgebraElement A(int k) const { return a_op(d, k); }
  AlgebraElement B(int k) const { return b_op(d, k); }
  AlgebraElement one() const { return AlgebraElement::one(d); }
  AlgebraElement c(const Scalar& s) const { return AlgebraElement::scalar(d, s); }
};

const Scalar& q() {
  static const Scalar v = Scalar::q();
  return v;
}
Scalar qp(int k) { return Scalar::q0_pow(2 * k); }
const Scalar& lambda_inv() {
  static const Scalar v = Scalar::lambda().inverse();
  return v;
}

std::string tag(const std::string& name, const std::string& params) { return name + "[" + params + "]"; }
std::string idx(const char* a, int i) { return std::string(a) + "=" + std::to_string(i); }
std::string idx(const char* a, int i, const char* b, int j) { return idx(a, i) + ";" + idx(b, j); }

int cartan(int i, int j) {
  if (i == j) return 2;
  if (i - j == 1 || j - i == 1) return -1;
  return 0;
}

void add(std::vector<NamedIdentity>& out, std::string name, AlgebraElement lhs, AlgebraElement rhs) {
  out.push_back({std::move(name), std::move(lhs), std::move(rhs)});
}

// X_j^2 X_l - (q + q^-1) X_j X_l X_j + X_l X_j^2
AlgebraElement serre(const AlgebraElement& xj, const AlgebraElement& xl) {
  const Scalar qq = q() + q().inverse();
  return xj * xj * xl - qq * (xj * xl * xj) + xl * xj * xj;
}

void hyperboloid_identities(std::vector<NamedIdentity>& out) {
  const Builder b{AlgebraDescriptor(1)};
  const AlgebraElement x = b.x(1);
  const AlgebraElement y = b.y(1);
  const AlgebraElement Q = b.Q(1);
  add(out, "xy", x * y - qp(2) * (y * x), b.c(Scalar(1) - qp(2)));
  add(out, "Q-def", lambda_inv() * (y * x - x * y), Q);
  add(out, "Q-def-alt", q() * (b.one() - y * x), Q);
  add(out, "Qxy[y]", Q * y, qp(2) * (y * Q));
  add(out, "Qxy[x]", Q * x, qp(-2) * (x * Q));
}

}  // namespace

std::vector<NamedIdentity> weyl_relation_identities(AlgebraDescriptor d) {
  std::vector<NamedIdentity> out;
  const Builder b{d};
  const int n = d.n;
  if (n == 1) hyperboloid_identities(out);
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      add(out, tag("qhn0", idx("k", k, "l", l)), b.y(k) * b.y(l), q() * (b.y(l) * b.y(k)));
      add(out, tag("qhn1", idx("k", k, "l", l)), b.x(k) * b.x(l), q().inverse() * (b.x(l) * b.x(k)));
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      if (k == l) continue;
      add(out, tag("qhn2", idx("k", k, "l", l)), b.x(l) * b.y(k), q() * (b.y(k) * b.x(l)));
    }
  }
  const Scalar one_minus_q2 = Scalar(1) - qp(2);
  for (int k = 1; k < n; ++k) {
    AlgebraElement rhs = qp(2) * (b.y(k) * b.x(k));
    for (int j = k + 1; j <= n; ++j) rhs -= (one_minus_q2 * qp(j - k)) * (b.y(j) * b.x(j));
    rhs += b.c(one_minus_q2 * qp(n - k));
    add(out, tag("qhn3", idx("k", k)), b.x(k) * b.y(k), rhs);
  }
  add(out, tag("qhn4", idx("n", n)), b.x(n) * b.y(n), qp(2) * (b.y(n) * b.x(n)) + b.c(one_minus_q2));

  for (int k = 1; k <= n; ++k) {
    add(out, tag("def-Q", idx("k", k)), b.Q(k), lambda_inv() * (b.y(k) * b.x(k) - b.x(k) * b.y(k)));
  }
  add(out, tag("def-Q", idx("k", n + 1)), b.Q(n + 1), b.one());

  for (int k = 1; k <= n + 1; ++k) {
    for (int j = 1; j <= n; ++j) {
      const int e = j < k ? 0 : 1;
      add(out, tag("Qy", idx("k", k, "j", j)), b.Q(k) * b.y(j), qp(2 * e) * (b.y(j) * b.Q(k)));
      add(out, tag("Qx", idx("k", k, "j", j)), b.Q(k) * b.x(j), qp(-2 * e) * (b.x(j) * b.Q(k)));
    }
  }
  for (int k = 1; k <= n + 1; ++k) {
    for (int l = k + 1; l <= n + 1; ++l) {
      add(out, tag("QQn", idx("k", k, "l", l)), b.Q(k) * b.Q(l), b.Q(l) * b.Q(k));
    }
  }
  for (int k = 1; k <= n; ++k) {
    add(out, tag("QQyx-yx", idx("k", k)), b.y(k) * b.x(k), b.Q(k + 1) - q().inverse() * b.Q(k));
    add(out, tag("QQyx-xy", idx("k", k)), b.x(k) * b.y(k), b.Q(k + 1) - q() * b.Q(k));
    add(out, tag("xyQ", idx("k", k)), b.x(k) * b.y(k) - qp(2) * (b.y(k) * b.x(k)), one_minus_q2 * b.Q(k + 1));
  }
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      const int e = j < k ? 0 : 1;
      add(out, tag("Q12y-y", idx("k", k, "j", j)), b.R(k) * b.y(j), qp(e) * (b.y(j) * b.R(k)));
      add(out, tag("Q12y-x", idx("k", k, "j", j)), b.R(k) * b.x(j), qp(-e) * (b.x(j) * b.R(k)));
    }
  }
  return out;
}

std::vector<NamedIdentity> ab_rho_identities(AlgebraDescriptor d) {
  std::vector<NamedIdentity> out;
  const Builder b{d};
  const int n = d.n;

  if (n == 1) {
    const AlgebraElement A = hyperboloid_a();
    const AlgebraElement B = hyperboloid_b();
    const AlgebraElement Q = b.Q(1);
    add(out, "ABQ[QA]", Q * A, qp(2) * (A * Q));
    add(out, "ABQ[QB]", Q * B, qp(-2) * (B * Q));
    add(out, "ABQ[AB-BA]", A * B - B * A, -lambda_inv() * b.Qi(1));
  }

  // rho commutation with coordinates
  for (int j = 1; j < n; ++j) {
    for (int k = 1; k <= n; ++k) {
      int e = 0;
      if (k == j) e = 1;
      if (k == j + 1) e = -1;
      add(out, tag("rhoy", idx("j", j, "k", k)), b.rho(j) * b.y(k), qp(e) * (b.y(k) * b.rho(j)));
      add(out, tag("rhox", idx("j", j, "k", k)), b.rho(j) * b.x(k), qp(-e) * (b.x(k) * b.rho(j)));
    }
  }
  for (int k = 1; k <= n; ++k) {
    const int e = k < n ? 1 : 2;
    add(out, tag("rhon-y", idx("k", k)), b.rho(n) * b.y(k), qp(e) * (b.y(k) * b.rho(n)));
    add(out, tag("rhon-x", idx("k", k)), b.rho(n) * b.x(k), qp(-e) * (b.x(k) * b.rho(n)));
  }

  // qAB1
  for (int i = 1; i <= n; ++i) {
    add(out, tag("qAB1-inv", idx("j", i)), b.rhoi(i) * b.rho(i), b.one());
    add(out, tag("qAB1-inv'", idx("j", i)), b.rho(i) * b.rhoi(i), b.one());
    for (int j = 1; j <= n; ++j) {
      if (i < j) add(out, tag("qAB1-rr", idx("i", i, "j", j)), b.rho(i) * b.rho(j), b.rho(j) * b.rho(i));
      add(out, tag("qAB1-rA", idx("i", i, "j", j)), b.rho(i) * b.A(j), qp(cartan(i, j)) * (b.A(j) * b.rho(i)));
      add(out, tag("qAB1-rB", idx("i", i, "j", j)), b.rho(i) * b.B(j), qp(-cartan(i, j)) * (b.B(j) * b.rho(i)));
    }
  }
  // qAB2, qAB3: commuting pairs and Serre relations
  const AlgebraElement zero(d);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      add(out, tag("qAB2-comm", idx("i", i, "j", j)), b.A(i) * b.A(j), b.A(j) * b.A(i));
      add(out, tag("qAB3-comm", idx("i", i, "j", j)), b.B(i) * b.B(j), b.B(j) * b.B(i));
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int l : {j - 1, j + 1}) {
      if (l < 1 || l > n) continue;
      add(out, tag("qAB2-serre", idx("j", j, "l", l)), serre(b.A(j), b.A(l)), zero);
      add(out, tag("qAB3-serre", idx("j", j, "l", l)), serre(b.B(j), b.B(l)), zero);
    }
  }
  // qAB4, qAB5
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      add(out, tag("qAB4-cross", idx("i", i, "j", j)), b.A(i) * b.B(j), b.B(j) * b.A(i));
    }
  }
  for (int j = 1; j < n; ++j) {
    add(out, tag("qAB4", idx("j", j)), b.A(j) * b.B(j) - b.B(j) * b.A(j), lambda_inv() * (b.rho(j) - b.rhoi(j)));
  }
  add(out, tag("qAB5", idx("n", n)), b.A(n) * b.B(n) - b.B(n) * b.A(n), -lambda_inv() * b.rhoi(n));

  // Auxiliary identities for the Serre relations.
  const Scalar q0 = Scalar::q0();
  for (int k = 2; k < n; ++k) {
    const AlgebraElement M = b.Qi(k) * b.x(k + 1) * b.y(k - 1);
    const AlgebraElement N = b.rhoi(k - 1) * b.rhoi(k) * b.Qi(k) * b.y(k + 1) * b.x(k - 1);
    add(out, tag("AAk", idx("k", k)), b.A(k - 1) * b.A(k),
        q() * (b.A(k) * b.A(k - 1)) + (lambda_inv() * q().inverse()) * M);
    add(out, tag("BBk", idx("k", k)), b.B(k - 1) * b.B(k), q().inverse() * (b.B(k) * b.B(k - 1)) - lambda_inv() * N);
    add(out, tag("hilf1", idx("k", k)), b.A(k) * M, q() * (M * b.A(k)));
    add(out, tag("hilf2", idx("k", k)), b.A(k - 1) * M, q().inverse() * (M * b.A(k - 1)));
    add(out, tag("hilf3", idx("k", k)), b.B(k) * N, q().inverse() * (N * b.B(k)));
    add(out, tag("hilf4", idx("k", k)), b.B(k - 1) * N, q() * (N * b.B(k - 1)));
  }
  if (n >= 2) {
    const AlgebraElement M = b.Qi(n) * b.y(n - 1);
    const AlgebraElement N = b.rhoi(n - 1) * b.rhoi(n) * b.Qi(n) * b.x(n - 1);
    add(out, tag("AAn-1", idx("n", n)), b.A(n - 1) * b.A(n), q() * (b.A(n) * b.A(n - 1)) - (lambda_inv() * q0) * M);
    add(out, tag("BBn", idx("n", n)), b.B(n - 1) * b.B(n),
        q().inverse() * (b.B(n) * b.B(n - 1)) - (lambda_inv() * q0.inverse() * q().inverse()) * N);
    add(out, tag("hilf5", idx("n", n)), b.A(n) * M, q() * (M * b.A(n)));
    add(out, tag("hilf6", idx("n", n)), b.A(n - 1) * M, q().inverse() * (M * b.A(n - 1)));
    add(out, tag("hilf7", idx("n", n)), b.B(n) * N, q().inverse() * (N * b.B(n)));
    add(out, tag("hilf8", idx("n", n)), b.B(n - 1) * N, q() * (N * b.B(n - 1)));
  }

  // Gamma as a product of rho powers.
  AlgebraElement g = b.one();
  for (int l = 1; l <= n; ++l) g = g * power(b.rho(l), -l * (n - l + 1));
  add(out, tag("Gamma-rho", idx("n", n)), gamma(d), g);
  return out;
}

std::vector<NamedIdentity> hermiticity_identities(AlgebraDescriptor d) {
  std::vector<NamedIdentity> out;
  const Builder b{d};
  for (int k = 1; k <= d.n; ++k) {
    add(out, tag("star-rho", idx("k", k)), star(b.rho(k)), b.rho(k));
    add(out, tag("star-A", idx("k", k)), star(b.A(k)), b.A(k));
    add(out, tag("star-B", idx("k", k)), star(b.B(k)), b.B(k));
    add(out, tag("star-Q", idx("k", k)), star(b.Q(k)), b.Q(k));
  }
  add(out, tag("star-Gamma", idx("n", d.n)), star(gamma(d)), gamma(d));
  if (d.n == 1) {
    add(out, "star-A[hyperboloid]", star(hyperboloid_a()), hyperboloid_a());
    add(out, "star-B[hyperboloid]", star(hyperboloid_b()), hyperboloid_b());
  }
  return out;
}

Report check_identities(const std::string& suite, const std::vector<NamedIdentity>& ids) {
  Report rep;
  for (const auto& id : ids) {
    const IdentityResult r = verify_identity(id.lhs, id.rhs);
    rep.add(suite, "n=" + std::to_string(id.lhs.n()) + "/" + id.name, static_cast<double>(r.remainder.size()), r.holds,
            r.holds ? std::string{} : r.remainder.to_string());
  }
  return rep;
}

}  // namespace qweyl
