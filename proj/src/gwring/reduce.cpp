#include "gwdn/errors.hpp"
#include "gwdn/gwring.hpp"

#include <algorithm>
#include <mutex>

namespace gwdn {

std::optional<CoefPoly> ReduceCache::find(const GWSymbol& s) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(s);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void ReduceCache::insert(const GWSymbol& s, const CoefPoly& value) {
  std::unique_lock lock(mutex_);
  table_.emplace(s, value);
}

std::size_t ReduceCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void ReduceCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

std::size_t Reducer::pick(std::size_t count) {
  if (rng_ == nullptr || count <= 1) return 0;
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(*rng_);
}

CoefPoly Reducer::reduce_checked(const GWSymbol& input, const Measure* parent) {
  if (input.has_negative_entry() || degree(input) < 0) return {};
  const GWSymbol s = canonicalize(input);
  if (parent != nullptr && !(termination_measure(s) < *parent))
    throw MeasureNotDecreasing("reduction step does not decrease the measure at " + s.str());
  if (auto hit = cache_.find(s)) return *hit;
  CoefPoly value = compute(s);
  cache_.insert(s, value);
  return value;
}

CoefPoly Reducer::evaluate(const GWExpr& expr, const Measure& parent) {
  CoefPoly total;
  for (const auto& term : expr) {
    CoefPoly product = term.coef;
    for (const auto& f : term.factors) {
      CoefPoly v = reduce_checked(f, &parent);
      if (v.is_zero()) {
        product = CoefPoly();
        break;
      }
      product *= v;
    }
    total += product;
  }
  return total;
}

CoefPoly Reducer::compute(const GWSymbol& s) {
  const int delta = degree(s);
  const Measure m = termination_measure(s);
  if (delta == 0) return CoefPoly(gw2_normalize(s));
  if (s.n() < 3) return evaluate(gw4_lift(s), m);
  if (s.sum_d() > 0) return evaluate(gw5_strip(s, pick(gw5_choice_count(s))), m);

  const auto& h = s.heads;
  auto exponent_is = [&](int e) { return [e](const GWSlot& x) { return x.e == e; }; };
  if (std::any_of(h.begin(), h.end(), exponent_is(0))) return {};
  auto one = std::find_if(h.begin(), h.end(), exponent_is(1));
  if (one != h.end()) {
    if (s.n() == 3) {
      const auto other = (one == h.begin()) ? h[1] : h[0];
      return CoefPoly::var(static_cast<std::uint32_t>(s.tail.e), static_cast<std::uint32_t>(other.e));
    }
    GWSymbol stripped = s;
    stripped.heads.erase(stripped.heads.begin() + (one - h.begin()));
    return CoefPoly(Rational(delta)) * reduce_checked(stripped, &m);
  }
  return evaluate(gw6_shuffle(s, pick(gw6_choice_count(s))), m);
}

CoefPoly reduce(const GWSymbol& s, ReduceCache& cache) { return Reducer(cache)(s); }

}  // namespace gwdn
