#include "dgp/field.hpp"

#include "dgp/error.hpp"
#include "dgp/rng.hpp"

namespace dgp {

bool prime_power(std::uint64_t q, std::uint32_t& p, int& k) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= q && q % d != 0) ++d;
  if (d * d > q) d = q;
  k = 0;
  while (q % d == 0) {
    q /= d;
    ++k;
  }
  p = static_cast<std::uint32_t>(d);
  return q == 1;
}

namespace {

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, int k) {
  std::vector<std::uint32_t> out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = a % p;
    a /= p;
  }
  return out;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

// Powers of x modulo the monic polynomial with low coefficients c; empty
// unless x has order exactly p^k - 1.
std::vector<std::uint32_t> power_table(const std::vector<std::uint32_t>& c, std::uint32_t p, int k,
                                       std::uint32_t q) {
  std::vector<std::uint32_t> table;
  table.reserve(q - 1);
  std::vector<std::uint32_t> cur(k, 0);
  cur[0] = 1;
  std::vector<bool> seen(q, false);
  for (std::uint32_t j = 0; j < q - 1; ++j) {
    const std::uint32_t v = undigits(cur, p);
    if (v == 0 || seen[v]) return {};
    seen[v] = true;
    table.push_back(v);
    // cur *= x, then reduce x^k = -(c_0 + ... + c_{k-1} x^{k-1}).
    const std::uint32_t top = cur[k - 1];
    for (int i = k - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < k; ++i) cur[i] = (cur[i] + (p - c[i]) * top) % p;
  }
  if (undigits(cur, p) != 1) return {};
  return table;
}

}  // namespace

Field::Field(std::uint32_t q) : q_(q) {
  if (q > 65536 || !prime_power(q, p_, k_))
    throw InputError("field order " + std::to_string(q) + " is not a prime power <= 65536");
  std::vector<std::uint32_t> table;
  if (k_ == 1) {
    modulus_ = {0, 1};
    for (std::uint32_t g = 1; g < p_ && table.empty(); ++g) {
      // g generates F_p^* iff its powers run through all p - 1 units.
      std::vector<bool> seen(p_, false);
      std::uint32_t x = 1;
      bool ok = true;
      for (std::uint32_t j = 0; j < p_ - 1 && ok; ++j) {
        if (seen[x]) ok = false;
        seen[x] = true;
        table.push_back(x);
        x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * g % p_);
      }
      if (!ok || x != 1) table.clear();
    }
  } else {
    for (std::uint32_t m = 0; m < q_ && table.empty(); ++m) {
      const auto c = digits(m, p_, k_);
      if (c[0] == 0) continue;
      table = power_table(c, p_, k_, q_);
      if (!table.empty()) {
        modulus_ = c;
        modulus_.push_back(1);
      }
    }
  }
  if (table.size() != q_ - 1) throw ConsistencyError("no primitive element found");
  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  for (std::uint32_t j = 0; j < q_ - 1; ++j) {
    exp_[j] = exp_[j + q_ - 1] = table[j];
    log_[table[j]] = j;
  }
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto d = digits(a, p_, k_);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = undigits(d, p_);
  }
  if (k_ > 1 && p_ != 2 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
  }
  if (!verify_axioms(0, 200)) throw ConsistencyError("field tables violate the axioms");
}

Field::Elt Field::add_digits(Elt a, Elt b) const {
  Elt out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Field::Elt Field::inv(Elt a) const {
  if (a == 0) throw InputError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Elt Field::pow(Elt a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Field::Elt Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

Field::Elt Field::from_int(const BigInt& n) const {
  BigInt r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

bool Field::verify_axioms(std::uint64_t seed, int samples) const {
  for (Elt x = 0; x < q_; ++x) {
    if (pow(x, q_) != x || add(x, neg(x)) != 0 || mul(x, 1) != x || add(x, 0) != x) return false;
    if (x != 0 && mul(x, inv(x)) != 1) return false;
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Elt a = static_cast<Elt>(rng.below(q_)), b = static_cast<Elt>(rng.below(q_)),
              c = static_cast<Elt>(rng.below(q_));
    if (add(add(a, b), c) != add(a, add(b, c)) || mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
  }
  return true;
}

}  // namespace dgp
