#include "aperylab/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace aperylab {

namespace {
// Dense membership scratch tables are refused above this generator size.
constexpr Value kMaxGenerator = 10'000'000;
}  // namespace

Value MaximalExpression::order() const {
  return std::accumulate(coefficients.begin(), coefficients.end(), Value{0});
}

std::vector<Value> minimal_generating_system(std::vector<Value> raw) {
  if (raw.empty()) throw EmptyInput();
  for (Value v : raw) {
    if (v <= 0) throw ZeroGenerator();
    if (v > kMaxGenerator) throw BoundTooLarge("generator " + std::to_string(v) + " is too large");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  Value g = 0;
  for (Value v : raw) g = std::gcd(g, v);
  if (g != 1) throw GcdNotOne();

  if (raw.front() == 1) return {1};

  // Membership table of the generated semigroup up to the largest input.
  const Value top = raw.back();
  std::vector<char> member(static_cast<std::size_t>(top) + 1, 0);
  member[0] = 1;
  for (Value s = 1; s <= top; ++s) {
    for (Value v : raw) {
      if (v > s) break;
      if (member[static_cast<std::size_t>(s - v)]) {
        member[static_cast<std::size_t>(s)] = 1;
        break;
      }
    }
  }

  // A generator is redundant exactly when it splits as a sum of two nonzero
  // members.
  std::vector<Value> minimal;
  const Value least = raw.front();
  for (Value v : raw) {
    bool redundant = false;
    for (Value m = least; m <= v - least; ++m) {
      if (member[static_cast<std::size_t>(m)] && member[static_cast<std::size_t>(v - m)]) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(v);
  }
  return minimal;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Value> raw_generators)
    : gens_(minimal_generating_system(std::move(raw_generators))), oracle_(gens_) {
  const Value e = multiplicity();
  apery0_.assign(static_cast<std::size_t>(e), -1);
  Value found = 0;
  for (Value s = 0; found < e; ++s) {
    if (oracle_.ord_or_neg(s) < 0) continue;
    Value& slot = apery0_[static_cast<std::size_t>(s % e)];
    if (slot < 0) {
      slot = s;
      ++found;
    }
  }
  frobenius_ = *std::max_element(apery0_.begin(), apery0_.end()) - e;
  conductor_ = frobenius_ + 1;
  // Enough room for every scan the table and torsion machinery performs;
  // the oracle still grows on demand past this.
  oracle_.ensure(conductor_ + (e + 1) * e + 1);
}

bool NumericalSemigroup::contains(Value s) const {
  if (s < 0) return false;
  return s >= apery0_[static_cast<std::size_t>(s % multiplicity())];
}

std::optional<int> NumericalSemigroup::ord(Value s) const { return oracle_.ord(s); }

bool NumericalSemigroup::in_ideal(Value s, int level) const {
  if (level < 0) throw Error("ideal level must be nonnegative");
  if (!contains(s)) return false;
  if (level == 0) return true;
  return oracle_.ord_or_neg(s) >= level;
}

std::vector<Value> NumericalSemigroup::next_apery_row(const std::vector<Value>& row,
                                                      int level) const {
  // Each column either keeps its value or steps up by e.
  const Value e = multiplicity();
  std::vector<Value> next(row);
  for (auto& v : next) {
    if (oracle_.ord_or_neg(v) < level) v += e;
    if (oracle_.ord_or_neg(v) < level) {
      throw InternalError("Apéry row recurrence failed to reach the requested ideal level");
    }
  }
  return next;
}

AperySet NumericalSemigroup::apery_set(int level) const {
  if (level < 0) throw Error("ideal level must be nonnegative");
  const Value e = multiplicity();
  const int r = reduction_number();
  std::vector<Value> row = apery0_;
  const int stepped = std::min(level, r);
  for (int m = 1; m <= stepped; ++m) row = next_apery_row(row, m);
  if (level > r) {
    const Value stride = static_cast<Value>(level - r) * e;
    for (auto& v : row) v += stride;
  }
  return AperySet{e, level, std::move(row)};
}

AperySet NumericalSemigroup::apery_set(int level, Value modulus) const {
  if (level < 0) throw Error("ideal level must be nonnegative");
  if (modulus == multiplicity()) return apery_set(level);
  if (modulus <= 0 || !contains(modulus)) throw InvalidModulus(modulus);
  std::vector<Value> values(static_cast<std::size_t>(modulus));
  for (Value i = 0; i < modulus; ++i) {
    Value s = i;
    while (!contains(s)) s += modulus;
    while (level > 0 && oracle_.ord_or_neg(s) < level) s += modulus;
    values[static_cast<std::size_t>(i)] = s;
  }
  return AperySet{modulus, level, std::move(values)};
}

int NumericalSemigroup::reduction_number() const {
  if (reduction_) return *reduction_;
  const Value e = multiplicity();
  std::vector<Value> row = apery0_;
  int m = 0;
  while (true) {
    std::vector<Value> next = next_apery_row(row, m + 1);
    bool stabilized = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (next[i] != row[i] + e) {
        stabilized = false;
        break;
      }
    }
    if (stabilized) break;
    row = std::move(next);
    ++m;
    if (m > e) throw InternalError("reduction number exceeded multiplicity bound");
  }
  reduction_ = m;
  return m;
}

const InvariantReport& NumericalSemigroup::invariants() const {
  if (invariants_) return *invariants_;
  InvariantReport rep;
  const Value e = multiplicity();
  rep.multiplicity = e;
  rep.embdim = embdim();
  rep.reduction_number = reduction_number();
  rep.frobenius = frobenius_;
  rep.conductor = conductor_;

  Value apery_sum = 0;
  for (Value w : apery0_) apery_sum += w;
  const Value twice_genus = 2 * apery_sum - e * (e - 1);
  if (twice_genus % (2 * e) != 0) throw InternalError("genus formula did not divide evenly");
  rep.genus = twice_genus / (2 * e);

  // Blow-up semigroup <n_1, n_2 - n_1, ..., n_b - n_1>.
  std::vector<Value> blowup_gens{e};
  for (std::size_t i = 1; i < gens_.size(); ++i) blowup_gens.push_back(gens_[i] - e);
  NumericalSemigroup blowup(std::move(blowup_gens));
  Value rho = 0;
  const Value scan_top = std::max(conductor_, blowup.conductor());
  for (Value s = 0; s < scan_top; ++s) {
    if (blowup.contains(s) && !contains(s)) ++rho;
  }
  rep.n_reduction = rho;

  for (Value z = -e; z <= frobenius_; ++z) {
    if (contains(z)) continue;
    bool pf = true;
    for (Value g : gens_) {
      if (!contains(z + g)) {
        pf = false;
        break;
      }
    }
    if (pf) rep.pseudo_frobenius.push_back(z);
  }
  rep.type = static_cast<int>(rep.pseudo_frobenius.size());

  std::vector<Value> sorted_apery(apery0_);
  std::sort(sorted_apery.begin(), sorted_apery.end());
  rep.is_symmetric = true;
  for (std::size_t i = 0; i < sorted_apery.size(); ++i) {
    if (sorted_apery[i] + sorted_apery[sorted_apery.size() - 1 - i] != sorted_apery.back()) {
      rep.is_symmetric = false;
      break;
    }
  }

  invariants_ = std::move(rep);
  return *invariants_;
}

namespace {

// Exhaustive feasibility check with interval pruning: can `v` be written
// using generators gens[j..] with coefficient total exactly `c`?
class ExactReach {
 public:
  explicit ExactReach(const std::vector<Value>& gens) : gens_(gens) {}

  bool feasible(Value v, Value c, std::size_t j) {
    if (j == gens_.size()) return v == 0 && c == 0;
    if (v < c * gens_[j] || v > c * gens_.back()) return false;
    if (j + 1 == gens_.size()) return v == c * gens_[j];
    const Key key{v, c, j};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    for (Value t = std::min(c, v / gens_[j]); t >= 0; --t) {
      if (feasible(v - t * gens_[j], c - t, j + 1)) {
        ok = true;
        break;
      }
    }
    memo_.emplace(key, ok);
    return ok;
  }

 private:
  struct Key {
    Value v;
    Value c;
    std::size_t j;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = static_cast<std::uint64_t>(k.v) * 0x9E3779B97F4A7C15ULL;
      h ^= static_cast<std::uint64_t>(k.c) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h ^= static_cast<std::uint64_t>(k.j) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  const std::vector<Value>& gens_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace

MaximalExpression NumericalSemigroup::canonical_max_expression(Value s) const {
  const int order = oracle_.ord_or_neg(s);
  if (order < 0) throw NotInSemigroup(s);
  if (s >= (Value{1} << 43)) throw Overflow("element too large for expression search");

  ExactReach reach(gens_);
  std::vector<Value> coeffs(gens_.size(), 0);
  Value v = s;
  Value c = order;
  for (std::size_t i = 0; i + 1 < gens_.size(); ++i) {
    for (Value t = std::min(c, v / gens_[i]); t >= 0; --t) {
      if (reach.feasible(v - t * gens_[i], c - t, i + 1)) {
        coeffs[i] = t;
        v -= t * gens_[i];
        c -= t;
        break;
      }
    }
  }
  if (v != c * gens_.back()) throw InternalError("maximal expression search failed");
  coeffs.back() = c;
  return MaximalExpression{s, std::move(coeffs)};
}

}  // namespace aperylab
