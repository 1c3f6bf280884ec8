#include "dgp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "dgp/error.hpp"

namespace dgp {

namespace {

struct Precedes {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.precedes(b); }
};

void check_var(int var) {
  if (var < 1 || var > kMaxVars) throw InputError("variable index " + std::to_string(var) + " out of range");
}

Monomial times(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    const int e = a.exps[i] + b.exps[i];
    if (e > 255) throw ResourceError("monomial exponent overflow");
    m.exps[i] = static_cast<std::uint8_t>(e);
  }
  m.degree = a.degree + b.degree;
  return m;
}

}  // namespace

SparsePoly SparsePoly::constant(const BigInt& c) {
  SparsePoly p;
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

SparsePoly SparsePoly::variable(int var) {
  check_var(var);
  SparsePoly p;
  Term t;
  t.mono.exps[var - 1] = 1;
  t.mono.degree = 1;
  t.coeff = 1;
  p.terms_.push_back(std::move(t));
  return p;
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono.precedes(b.mono); });
  SparsePoly p;
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int SparsePoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree; }

int SparsePoly::degree_in(int var) const {
  check_var(var);
  int d = terms_.empty() ? -1 : 0;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.exponent(var)));
  return d;
}

std::vector<int> SparsePoly::variables() const {
  std::array<bool, kMaxVars> seen{};
  for (const Term& t : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.mono.exps[i]) seen[i] = true;
  std::vector<int> out;
  for (int i = 0; i < kMaxVars; ++i)
    if (seen[i]) out.push_back(i + 1);
  return out;
}

int SparsePoly::max_variable() const {
  const auto v = variables();
  return v.empty() ? 0 : v.back();
}

bool SparsePoly::is_multilinear() const {
  for (const Term& t : terms_)
    for (auto e : t.mono.exps)
      if (e > 1) return false;
  return true;
}

bool SparsePoly::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.degree != terms_.front().mono.degree) return false;
  return true;
}

bool SparsePoly::unit_coefficients() const {
  for (const Term& t : terms_)
    if (t.coeff != 1 && t.coeff != -1) return false;
  return true;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono.precedes(o.terms_[j].mono))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].mono.precedes(terms_[i].mono)) {
      out.push_back(o.terms_[j++]);
    } else {
      BigInt c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) out.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) { return *this += -o; }

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
  std::map<Monomial, BigInt, Precedes> acc;
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(times(a.mono, b.mono), 0);
      it->second += a.coeff * b.coeff;
    }
  terms_.clear();
  for (auto& [m, c] : acc)
    if (c != 0) terms_.push_back({m, std::move(c)});
  return *this;
}

SparsePoly SparsePoly::scaled(const BigInt& c) const {
  if (c == 0) return {};
  SparsePoly p = *this;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

SparsePoly SparsePoly::substitute_zero(int var) const { return coefficient(var, 0); }

SparsePoly SparsePoly::coefficient(int var, int k) const {
  check_var(var);
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.mono.exponent(var) == k) {
      Term c = t;
      c.mono.exps[var - 1] = 0;
      c.mono.degree -= k;
      out.push_back(std::move(c));
    }
  return from_terms(std::move(out));
}

std::pair<SparsePoly, SparsePoly> SparsePoly::linear_split(int var) const {
  if (degree_in(var) > 1)
    throw InputError("linear_split: polynomial has degree > 1 in a" + std::to_string(var));
  return {coefficient(var, 1), coefficient(var, 0)};
}

std::uint64_t SparsePoly::eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
  unsigned __int128 sum = 0;
  for (const Term& t : terms_) {
    std::uint64_t v = static_cast<std::uint64_t>(mod_floor(t.coeff, p));
    for (int i = 0; i < kMaxVars && v; ++i)
      for (int e = 0; e < t.mono.exps[i]; ++e) {
        if (static_cast<std::size_t>(i + 1) >= point.size()) throw InputError("evaluation point too short");
        v = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) * (point[i + 1] % p) % p);
      }
    sum = (sum + v) % p;
  }
  return static_cast<std::uint64_t>(sum);
}

BigInt SparsePoly::eval(const std::vector<BigInt>& point) const {
  BigInt sum = 0;
  for (const Term& t : terms_) {
    BigInt v = t.coeff;
    for (int i = 0; i < kMaxVars; ++i)
      for (int e = 0; e < t.mono.exps[i]; ++e) {
        if (static_cast<std::size_t>(i + 1) >= point.size()) throw InputError("evaluation point too short");
        v *= point[i + 1];
      }
    sum += v;
  }
  return sum;
}

std::string SparsePoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) out << ' ';
    first = false;
    out << (t.coeff < 0 ? '-' : '+');
    const BigInt mag = t.coeff < 0 ? BigInt(-t.coeff) : t.coeff;
    bool wrote = false;
    if (mag != 1 || t.mono.degree == 0) {
      out << mag.str();
      wrote = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      if (!t.mono.exps[i]) continue;
      if (wrote) out << '*';
      out << 'a' << (i + 1);
      if (t.mono.exps[i] > 1) out << '^' << static_cast<int>(t.mono.exps[i]);
      wrote = true;
    }
  }
  return out.str();
}

SparsePoly SparsePoly::parse(const std::string& text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw InputError("polynomial text at offset " + std::to_string(i) + ": " + why);
  };
  auto number = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected a number");
    return text.substr(start, i - start);
  };
  skip();
  if (text.substr(i) == "0") return {};
  while ((skip(), i < text.size())) {
    Term t;
    t.coeff = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') t.coeff = -1;
      ++i;
    } else if (!terms.empty()) {
      fail("expected a sign");
    }
    bool need_factor = true;
    while (need_factor) {
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        t.coeff *= BigInt(number());
      } else if (i < text.size() && text[i] == 'a') {
        ++i;
        const int var = std::stoi(number());
        check_var(var);
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = std::stoi(number());
        }
        if (t.mono.exps[var - 1] + e > 255) fail("exponent too large");
        t.mono.exps[var - 1] = static_cast<std::uint8_t>(t.mono.exps[var - 1] + e);
        t.mono.degree += e;
      } else {
        fail("expected a factor");
      }
      need_factor = i < text.size() && text[i] == '*';
      if (need_factor) ++i;
    }
    terms.push_back(std::move(t));
  }
  return from_terms(std::move(terms));
}

}  // namespace dgp
