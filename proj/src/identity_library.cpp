#include <string>

#include "loops/identity.hpp"

namespace loops {

namespace {

// Identities of automorphic loops. Translations use the standard macros:
// (y)R_x^-1 = R_inv(y, x), (y)L_x^-1 = L_inv(y, x), (y)T_x^-1 = T_inv(y, x).
constexpr const char* kCorpus = R"(# squares and inverse translations
lemma31_a: (x*y)^2 = x*R_inv(y, x^-1)*y
lemma31_b: (x*y)^2 = x*L_inv(x*y, y^-1)
lemma31_c: (x*y*x^-1)^2 = x*y*(y*x^-1)
lemma31_d: R_inv(x^2, y) = R_inv(x, R_inv(x, y)^-1)
lemma31_e: y*x*x^-1 = x^-1*(x*y)
lemma31_f: x^2 = R_inv(x, y)*L_inv(x, y^-1)
lemma31_g: y^2*x*x^-1 = y*x*(x^-1*y)
lemma31_h: y^2*x*x^-1 = y*x^-1*(x*y)
cor32_a: x^-1*(x*y^2) = x*y*(x^-1*y) => x*y = y*x
cor32_b: x^-1*(x*y^2) = x^-1*y*(x*y) => x*y = y*x
# nested right divisions
lemma34_a: R_inv(x, R_inv(x, y)^-1)^-1*R_inv(x, y) = R_inv(x, y)^-1*y^-1
lemma34_b: R_inv(R_inv(x, x*y)^-1, x^-1)^-1*x = R_inv(x, y*x)
lemma34_c: R_inv(x*R_inv(y, z)*z, y) = R_inv(x*z, y)*R_inv(z, y)^-1
lemma34_d: R_inv(x*y, z)*R_inv(y, z)^-1 = R_inv(x, z)*R_inv(y, z)^-1*y
lemma34_e: x^-1*(R_inv(x, T_inv(y, x))*R_inv(R_inv(y, x), T_inv(y, x))^-1) = R_inv(x, T_inv(y, x))*R_inv(y, T_inv(y, x))^-1
lemma34_f: R_inv(R_inv(x, x*y)^-1, R_inv(y, x*y)*R_inv(x, x*y)^-1) = x
prop30: R_inv(x, T_inv(x, y))*y = T_inv(y, x)
# inverses, flexibility, T
aaip: (x*y)^-1 = y^-1*x^-1
aaip_cor: L_inv(y, x)^-1 = R_inv(y^-1, x^-1)
flexibility: x*(y*x) = x*y*x
tx_inv: (x*y)/x = T(y, x^-1)
co1_fwd: x*(x*y) = y*x*x => x*y = y*x
co1_bwd: x*y = y*x => x*(x*y) = y*x*x
theorem31_fwd: x*(x*y) = y*x*x => x^2*y = y*x^2
theorem31_bwd: x^2*y = y*x^2 => x*(x*y) = y*x*x
# powers of one element commute past each other
)";

std::string power_of_x(int k) {
  if (k == 1) return "x";
  if (k == -1) return "x^-1";
  return "x^" + std::to_string(k);
}

std::string build_source() {
  std::string out = kCorpus;
  constexpr int kExponents[] = {-2, -1, 1, 2};
  auto tag = [](const char* family, int m, int n) {
    return std::string(family) + "[m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]: ";
  };
  for (int m : kExponents)
    for (int n : kExponents) {
      if (m >= n) continue;
      const auto xm = power_of_x(m), xn = power_of_x(n);
      out += tag("prop22_a", m, n) + xm + "*(" + xn + "*y) = " + xn + "*(" + xm + "*y)\n";
    }
  for (int m : kExponents)
    for (int n : kExponents) {
      if (m >= n) continue;
      const auto xm = power_of_x(m), xn = power_of_x(n);
      out += tag("prop22_b", m, n) + "y*" + xm + "*" + xn + " = y*" + xn + "*" + xm + "\n";
    }
  for (int m : kExponents)
    for (int n : kExponents) {
      const auto xm = power_of_x(m), xn = power_of_x(n);
      out += tag("prop22_c", m, n) + xm + "*y*" + xn + " = " + xm + "*(y*" + xn + ")\n";
    }
  out += "prop22_d: x*(y*x*(z*x)) = x*y*(x*z)*x\n";
  return out;
}

}  // namespace

std::string_view builtin_library_source() {
  static const std::string source = build_source();
  return source;
}

const IdentityLibrary& builtin_library() {
  static const IdentityLibrary library = [] {
    auto file = parse_identity_file(builtin_library_source());
    return IdentityLibrary{std::move(file.macros), std::move(file.statements)};
  }();
  return library;
}

}  // namespace loops
