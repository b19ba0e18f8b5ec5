#include "ctri/rational.hpp"

#include "ctri/error.hpp"

#include <cctype>

namespace ctri {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw Error(ErrorCode::kInput, "empty number");

  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto to_int = [&](std::string t) {
    if (!valid_int(t)) throw Error(ErrorCode::kInput, "malformed number '" + std::string(text) + "'");
    if (t[0] == '+') t.erase(0, 1);
    return Int(t, 10);
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Int num = to_int(s.substr(0, slash));
    Int den = to_int(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::kInput, "zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty()) frac = "0";
    Int w = to_int(whole);
    Int f = to_int(frac);
    if (frac[0] == '-' || frac[0] == '+') throw Error(ErrorCode::kInput, "malformed number '" + s + "'");
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Int num = abs(w) * scale + f;
    if (negative) num = -num;
    Rat r(num, scale);
    r.canonicalize();
    return r;
  }
  return Rat(to_int(s));
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) { return v.get_str(); }

int sign(const Int& v) { return sgn(v); }
int sign(const Rat& v) { return sgn(v); }

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::size_t hash_value(const Int& v) {
  // FNV-1a over the limbs plus the sign.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  const mpz_srcptr z = v.get_mpz_t();
  mix(static_cast<std::uint64_t>(mpz_sgn(z) + 1));
  std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) mix(static_cast<std::uint64_t>(mpz_getlimbn(z, i)));
  return h;
}

bool rational_sqrt(const Rat& v, Rat& root) {
  if (sgn(v) < 0) return false;
  const Int& num = v.get_num();
  const Int& den = v.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rat(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace ctri
