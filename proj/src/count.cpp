#include "dgp/count.hpp"

#include <algorithm>
#include <limits>

#include "dgp/error.hpp"

namespace dgp {

namespace {

bool precedes(const FqPoly::FqTerm& a, const FqPoly::FqTerm& b) { return a.mono.precedes(b.mono); }

// q^e, saturating at the largest uint64.
std::uint64_t power_saturated(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

BigInt power(std::uint64_t q, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

FqPoly::FqPoly(const SparsePoly& f, const Field& field) {
  for (const Term& t : f.terms()) {
    const Elt c = field.from_int(t.coeff);
    if (c != 0) terms_.push_back({t.mono, c});
  }
}

FqPoly FqPoly::from_terms(std::vector<FqTerm> terms, const Field& field) {
  std::sort(terms.begin(), terms.end(), precedes);
  FqPoly out;
  for (const FqTerm& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = field.add(out.terms_.back().coeff, t.coeff);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

std::vector<int> FqPoly::variables() const {
  std::array<bool, kMaxVars> seen{};
  for (const FqTerm& t : terms_)
    for (int v = 0; v < kMaxVars; ++v)
      if (t.mono.exps[v]) seen[v] = true;
  std::vector<int> out;
  for (int v = 0; v < kMaxVars; ++v)
    if (seen[v]) out.push_back(v + 1);
  return out;
}

int FqPoly::degree_in(int var) const {
  int d = 0;
  for (const FqTerm& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

std::pair<FqPoly, FqPoly> FqPoly::linear_split(int var) const {
  FqPoly hi, lo;
  for (FqTerm t : terms_) {
    const int e = t.mono.exponent(var);
    if (e > 1) throw InputError("polynomial is not linear in the requested variable");
    if (e == 1) {
      t.mono.exps[var - 1] = 0;
      t.mono.degree -= 1;
      hi.terms_.push_back(t);
    } else {
      lo.terms_.push_back(t);
    }
  }
  std::sort(hi.terms_.begin(), hi.terms_.end(), precedes);
  return {std::move(hi), std::move(lo)};
}

FqPoly FqPoly::minus(const FqPoly& o, const Field& field) const {
  std::vector<FqTerm> all = terms_;
  for (FqTerm t : o.terms_) {
    t.coeff = field.neg(t.coeff);
    all.push_back(t);
  }
  return from_terms(std::move(all), field);
}

FqPoly FqPoly::times(const FqPoly& o, const Field& field) const {
  std::vector<FqTerm> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const FqTerm& a : terms_)
    for (const FqTerm& b : o.terms_) {
      FqTerm t{a.mono, field.mul(a.coeff, b.coeff)};
      for (int v = 0; v < kMaxVars; ++v) {
        const int e = t.mono.exps[v] + b.mono.exps[v];
        if (e > 255) throw ResourceError("exponent overflow in polynomial product");
        t.mono.exps[v] = static_cast<std::uint8_t>(e);
      }
      t.mono.degree += b.mono.degree;
      all.push_back(t);
    }
  return from_terms(std::move(all), field);
}

FqPoly FqPoly::monic(const Field& field) const {
  if (terms_.empty() || terms_[0].coeff == 1) return *this;
  const Elt s = field.inv(terms_[0].coeff);
  FqPoly out = *this;
  for (FqTerm& t : out.terms_) t.coeff = field.mul(t.coeff, s);
  return out;
}

FqPoly FqPoly::renamed(const std::vector<int>& map) const {
  FqPoly out;
  for (const FqTerm& t : terms_) {
    FqTerm u{Monomial{}, t.coeff};
    u.mono.degree = t.mono.degree;
    for (int v = 1; v < static_cast<int>(map.size()); ++v)
      if (t.mono.exps[v - 1]) u.mono.exps[map[v] - 1] = t.mono.exps[v - 1];
    out.terms_.push_back(u);
  }
  std::sort(out.terms_.begin(), out.terms_.end(), precedes);
  return out;
}

FqPoly::Elt FqPoly::eval(const std::vector<Elt>& point, const Field& field) const {
  Elt sum = 0;
  for (const FqTerm& t : terms_) {
    Elt x = t.coeff;
    for (int v = 0; v < kMaxVars && x != 0; ++v)
      if (t.mono.exps[v]) x = field.mul(x, field.pow(point[v + 1], t.mono.exps[v]));
    sum = field.add(sum, x);
  }
  return sum;
}

bool FqPoly::operator==(const FqPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

PointCounter::PointCounter(std::uint32_t q, std::uint64_t budget) : field_(q), budget_(budget) {}

std::vector<FqPoly> PointCounter::convert(const std::vector<SparsePoly>& polys, int nvars) const {
  if (nvars < 0 || nvars > kMaxVars) throw InputError("variable count out of range");
  std::vector<FqPoly> out;
  for (const SparsePoly& f : polys) {
    if (f.max_variable() > nvars)
      throw InputError("polynomial uses a" + std::to_string(f.max_variable()) + " beyond " +
                       std::to_string(nvars) + " variables");
    out.emplace_back(f, field_);
  }
  return out;
}

BigInt PointCounter::brute_force(const std::vector<SparsePoly>& polys, int nvars) {
  return enumerate(convert(polys, nvars), nvars);
}

BigInt PointCounter::eliminated(const std::vector<SparsePoly>& polys, int nvars) {
  std::vector<FqPoly> sys = convert(polys, nvars);
  const BigInt n = recurse(sys, nvars);
  if (cross_check_ > 0) {
    std::vector<bool> used(nvars + 1, false);
    for (const FqPoly& f : sys)
      for (int v : f.variables()) used[v] = true;
    const int u = static_cast<int>(std::count(used.begin(), used.end(), true));
    if (power_saturated(q(), u) <= cross_check_) {
      const BigInt b = enumerate(sys, nvars);
      ++stats_.cross_checked;
      if (b != n)
        throw ConsistencyError("eliminated count " + to_string(n) + " differs from enumeration " + to_string(b) +
                               " at q=" + std::to_string(q()));
    } else {
      ++stats_.cross_skipped;
    }
  }
  return n;
}


namespace {

// Each polynomial is held densely in its own variables, ordered by level;
// fixing the variable of a level collapses the leading index by Horner.
struct DenseEnumerator {
  struct Stage {
    int poly;
    int degree;
    std::size_t rest;  // size of the array after this substitution
  };

  explicit DenseEnumerator(const Field& f) : field(f) {}

  const Field& field;
  int levels = 0;
  std::vector<std::vector<Stage>> stages;               // by level
  std::vector<std::vector<std::vector<FqPoly::Elt>>> buf;  // buf[poly][stage]
  std::vector<std::vector<int>> stage_index;           // stage number of (level, i)
  std::vector<std::vector<bool>> finishes;
  std::uint64_t leaves = 0;

  void run(int d) {
    if (d == levels) {
      ++leaves;
      return;
    }
    const std::uint32_t q = field.q();
    const auto& here = stages[d];
    for (std::uint32_t v = 0; v < q; ++v) {
      bool alive = true;
      for (std::size_t i = 0; i < here.size() && alive; ++i) {
        const Stage& st = here[i];
        const int s = stage_index[d][i];
        const auto& in = buf[st.poly][s];
        auto& out = buf[st.poly][s + 1];
        for (std::size_t j = 0; j < st.rest; ++j) {
          FqPoly::Elt x = in[st.degree * st.rest + j];
          for (int e = st.degree - 1; e >= 0; --e) x = field.add(field.mul(x, v), in[e * st.rest + j]);
          out[j] = x;
        }
        if (finishes[d][i] && out[0] != 0) alive = false;
      }
      if (alive) run(d + 1);
    }
  }
};

}  // namespace

BigInt PointCounter::enumerate(const std::vector<FqPoly>& input, int nvars) {
  std::vector<const FqPoly*> polys;
  for (const FqPoly& f : input) {
    if (f.is_zero()) continue;
    if (f.is_constant()) return 0;
    polys.push_back(&f);
  }
  std::vector<int> freq(nvars + 1, 0);
  for (const FqPoly* f : polys)
    for (const auto& t : f->terms())
      for (int v = 1; v <= nvars; ++v)
        if (t.mono.exponent(v)) ++freq[v];
  std::vector<int> order;
  for (int v = 1; v <= nvars; ++v)
    if (freq[v]) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return freq[a] > freq[b]; });
  const int used = static_cast<int>(order.size());
  if (power_saturated(q(), used) > budget_)
    throw ResourceError("enumeration of " + std::to_string(q()) + "^" + std::to_string(used) +
                        " points exceeds the budget of " + std::to_string(budget_));
  std::vector<int> level(nvars + 1, -1);
  for (int i = 0; i < used; ++i) level[order[i]] = i;

  DenseEnumerator en(field_);
  en.levels = used;
  en.stages.resize(used);
  en.stage_index.resize(used);
  en.finishes.resize(used);
  en.buf.resize(polys.size());
  for (int p = 0; p < static_cast<int>(polys.size()); ++p) {
    std::vector<int> vars = polys[p]->variables();
    std::sort(vars.begin(), vars.end(), [&](int a, int b) { return level[a] < level[b]; });
    const int r = static_cast<int>(vars.size());
    std::vector<int> deg(r);
    std::vector<std::size_t> size(r + 1, 1);
    for (int i = 0; i < r; ++i) deg[i] = polys[p]->degree_in(vars[i]);
    for (int i = r - 1; i >= 0; --i) {
      size[i] = size[i + 1] * (deg[i] + 1);
      if (size[i] > (std::size_t{1} << 24)) throw ResourceError("polynomial too large for dense enumeration");
    }
    auto& b = en.buf[p];
    b.resize(r + 1);
    for (int i = 0; i <= r; ++i) b[i].assign(size[i], 0);
    for (const auto& t : polys[p]->terms()) {
      std::size_t idx = 0;
      for (int i = 0; i < r; ++i) idx += t.mono.exponent(vars[i]) * size[i + 1];
      b[0][idx] = field_.add(b[0][idx], t.coeff);
    }
    for (int i = 0; i < r; ++i) {
      const int d = level[vars[i]];
      en.stages[d].push_back({p, deg[i], size[i + 1]});
      en.stage_index[d].push_back(i);
      en.finishes[d].push_back(i == r - 1);
    }
  }
  en.run(0);
  stats_.leaves += en.leaves;
  ++stats_.enumerations;
  return BigInt(en.leaves) * power(q(), nvars - used);
}

namespace {

void append_key(std::string& key, const FqPoly& f, int nvars) {
  const std::size_t n = f.terms().size();
  for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>(n >> (8 * b)));
  for (const auto& t : f.terms()) {
    for (int v = 1; v <= nvars; ++v) key.push_back(static_cast<char>(t.mono.exponent(v)));
    key.push_back(static_cast<char>(t.coeff & 0xff));
    key.push_back(static_cast<char>(t.coeff >> 8));
    key.push_back(static_cast<char>(t.coeff >> 16));
  }
}

// Renaming that removes variable x and shifts the later ones down.
std::vector<int> drop_map(int x, int nvars) {
  std::vector<int> map(nvars + 1, 0);
  for (int v = 1; v <= nvars; ++v) map[v] = v < x ? v : v - 1;
  return map;
}

}  // namespace

BigInt PointCounter::recurse(std::vector<FqPoly> polys, int nvars) {
  // Canonical form: monic, sorted, duplicate-free, variables compressed.
  std::vector<FqPoly> sys;
  for (FqPoly& f : polys) {
    if (f.is_zero()) continue;
    if (f.is_constant()) return 0;
    sys.push_back(f.monic(field_));
  }
  if (sys.empty()) return power(q(), nvars);
  std::vector<bool> used(nvars + 1, false);
  for (const FqPoly& f : sys)
    for (int v : f.variables()) used[v] = true;
  std::vector<int> map(nvars + 1, 0);
  int u = 0;
  for (int v = 1; v <= nvars; ++v)
    if (used[v]) map[v] = ++u;
  const BigInt free_factor = power(q(), nvars - u);
  if (u < nvars)
    for (FqPoly& f : sys) f = f.renamed(map);
  std::vector<std::pair<std::string, FqPoly>> keyed;
  for (FqPoly& f : sys) {
    std::string k;
    append_key(k, f, u);
    keyed.emplace_back(std::move(k), std::move(f));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::string key = std::to_string(u);
  sys.clear();
  for (auto& [k, f] : keyed) {
    key += k;
    sys.push_back(std::move(f));
  }
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++stats_.memo_hits;
    return free_factor * it->second;
  }

  // Pick a variable in which the whole system is linear.
  int best = 0;
  std::tuple<int, int, std::size_t> best_score{2, 0, 0};
  if (power_saturated(q(), u) > enumerate_below_) {
    for (int x = 1; x <= u; ++x) {
      int k = 0;
      bool linear = true, constant_lead = false;
      std::size_t size = 0;
      for (const FqPoly& f : sys) {
        const int d = f.degree_in(x);
        if (d > 1) {
          linear = false;
          break;
        }
        if (d == 1) {
          ++k;
          size += f.terms().size();
          if (!constant_lead && f.linear_split(x).first.is_constant()) constant_lead = true;
        }
      }
      if (!linear) continue;
      const std::tuple<int, int, std::size_t> score{constant_lead ? 0 : 1, k, size};
      if (best == 0 || score < best_score) {
        best = x;
        best_score = score;
      }
    }
  }

  BigInt result;
  if (best == 0) {
    result = enumerate(sys, u);
  } else {
    ++stats_.eliminations;
    const int x = best;
    const auto shift = drop_map(x, u);
    std::vector<FqPoly> rest, hi, lo;
    int pivot = -1;
    for (const FqPoly& f : sys) {
      if (f.degree_in(x) == 0) {
        rest.push_back(f.renamed(shift));
        continue;
      }
      auto [h, l] = f.linear_split(x);
      if (pivot < 0 && h.is_constant()) pivot = static_cast<int>(hi.size());
      hi.push_back(h.renamed(shift));
      lo.push_back(l.renamed(shift));
    }
    const int k = static_cast<int>(hi.size());
    auto resultant = [&](int i, int j) { return hi[i].times(lo[j], field_).minus(hi[j].times(lo[i], field_), field_); };
    if (pivot >= 0) {
      // The pivot equation solves for a_x everywhere.
      std::vector<FqPoly> s = rest;
      for (int j = 0; j < k; ++j)
        if (j != pivot) s.push_back(resultant(pivot, j));
      result = recurse(std::move(s), u - 1);
    } else {
      std::vector<FqPoly> both = rest, minors = rest, leads = rest;
      for (int i = 0; i < k; ++i) {
        both.push_back(hi[i]);
        both.push_back(lo[i]);
        leads.push_back(hi[i]);
        for (int j = i + 1; j < k; ++j) minors.push_back(resultant(i, j));
      }
      result = BigInt(q()) * recurse(std::move(both), u - 1) + recurse(std::move(minors), u - 1) -
               recurse(std::move(leads), u - 1);
    }
  }
  if (memo_.size() > 2000000) memo_.clear();
  memo_.emplace(std::move(key), result);
  return free_factor * result;
}

BigInt count_affine(const std::vector<SparsePoly>& polys, int nvars, std::uint32_t q, std::uint64_t budget) {
  PointCounter c(q, budget);
  return c.brute_force(polys, nvars);
}

BigInt count_affine_eliminated(const std::vector<SparsePoly>& polys, int nvars, std::uint32_t q,
                               std::uint64_t budget) {
  PointCounter c(q, budget);
  return c.eliminated(polys, nvars);
}

}  // namespace dgp
