#include "nfaba/baf.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace nfaba {

ArgSet baf_closure(const Baf& baf, const ArgSet& e) {
  ArgSet out = e;
  std::vector<ArgId> stack;
  for (auto a = e.find_first(); a != ArgSet::npos; a = e.find_next(a))
    stack.push_back(static_cast<ArgId>(a));
  while (!stack.empty()) {
    const ArgId a = stack.back();
    stack.pop_back();
    const auto& next = baf.supported_by(a);
    for (auto b = next.find_first(); b != ArgSet::npos; b = next.find_next(b)) {
      if (out.test(b)) continue;
      out.set(b);
      stack.push_back(static_cast<ArgId>(b));
    }
  }
  return out;
}

ArgSet range(const Baf& baf, const ArgSet& e) {
  ArgSet out = baf.empty_set();
  for (auto a = e.find_first(); a != ArgSet::npos; a = e.find_next(a))
    out |= baf.attacked_by(static_cast<ArgId>(a));
  return out;
}

bool is_conflict_free(const Baf& baf, const ArgSet& e) { return !range(baf, e).intersects(e); }

bool is_closed(const Baf& baf, const ArgSet& e) {
  for (auto a = e.find_first(); a != ArgSet::npos; a = e.find_next(a))
    if (!baf.supported_by(static_cast<ArgId>(a)).is_subset_of(e)) return false;
  return true;
}

namespace {

using Mask = std::uint64_t;

Mask to_mask(const ArgSet& s) {
  Mask m = 0;
  for (auto a = s.find_first(); a != ArgSet::npos; a = s.find_next(a)) m |= Mask{1} << a;
  return m;
}

void check_guard(const Baf& baf, const Limits& limits) {
  if (baf.size() > limits.max_enumeration)
    throw TooLarge("enumeration-limit", baf.size(), limits.max_enumeration);
}

// Defense against every closed set attacking `a`, by walking all subsets.
bool defends_closed_sets(const Baf& baf, const ArgSet& e, ArgId a, const Limits& limits) {
  const std::size_t n = baf.size();
  const std::size_t limit = std::min<std::size_t>(limits.max_enumeration, 30);
  if (n > limit) throw TooLarge("enumeration-limit", n, limit);
  std::vector<Mask> sup(n);
  for (std::size_t i = 0; i < n; ++i) sup[i] = to_mask(baf.supported_by(static_cast<ArgId>(i)));
  const Mask attackers = to_mask(baf.attackers(a));
  const Mask hit = to_mask(range(baf, e));
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (!(s & attackers)) continue;
    bool closed = true;
    for (Mask rest = s; rest && closed; rest &= rest - 1)
      closed = (sup[static_cast<std::size_t>(__builtin_ctzll(rest))] & ~s) == 0;
    if (closed && !(s & hit)) return false;
  }
  return true;
}

// Precomputed single-argument closures and the arguments each closure
// threatens, shared by Gamma and the search.
class Tables {
 public:
  explicit Tables(const Baf& baf)
      : baf_(baf), n_(baf.size()), single_(n_), holders_(n_, ArgSet(n_)) {
    for (std::size_t x = 0; x < n_; ++x) {
      ArgSet one = baf.empty_set();
      one.set(x);
      single_[x] = baf_closure(baf, one);
      for (auto y = single_[x].find_first(); y != ArgSet::npos; y = single_[x].find_next(y))
        holders_[y].set(x);
    }
  }

  const Baf& baf() const { return baf_; }
  std::size_t size() const { return n_; }
  const ArgSet& single(ArgId a) const { return single_[a]; }
  /// Arguments whose closure contains `a`.
  const ArgSet& holders(ArgId a) const { return holders_[a]; }

  ArgSet closure(const ArgSet& e) const {
    ArgSet out = e;
    for (auto a = e.find_first(); a != ArgSet::npos; a = e.find_next(a)) out |= single_[a];
    return out;
  }

  bool defends_with(const ArgSet& hit, ArgId a) const {
    const auto& att = baf_.attackers(a);
    for (auto b = att.find_first(); b != ArgSet::npos; b = att.find_next(b))
      if (!single_[b].intersects(hit)) return false;
    return true;
  }

  ArgSet gamma(const ArgSet& e) const {
    const ArgSet hit = range(baf_, e);
    ArgSet out(n_);
    for (std::size_t a = 0; a < n_; ++a)
      if (defends_with(hit, static_cast<ArgId>(a))) out.set(a);
    return out;
  }

 private:
  const Baf& baf_;
  std::size_t n_;
  std::vector<ArgSet> single_;
  std::vector<ArgSet> holders_;
};

// Exact membership test for a semantics with a local definition.
bool satisfies(const Tables& t, Semantics sigma, const ArgSet& e, const Pbaf* premises) {
  const Baf& baf = t.baf();
  const ArgSet hit = range(baf, e);
  if (hit.intersects(e)) return false;
  if (sigma == Semantics::cf) return true;
  if (!is_closed(baf, e)) return false;
  if (sigma == Semantics::stb) return (hit | e).all();
  if (premises && !is_exhaustive(*premises, e)) return false;
  ArgSet gamma(t.size());
  for (std::size_t a = 0; a < t.size(); ++a)
    if (t.defends_with(hit, static_cast<ArgId>(a))) gamma.set(a);
  if (!e.is_subset_of(gamma)) return false;
  return sigma != Semantics::co || gamma == e;
}

// Backtracking over IN/OUT decisions. Every propagation step only removes
// candidates that cannot be part of any extension below the node, and leaves
// are checked against the definitions, so the result is exact.
class Search {
 public:
  Search(const Tables& t, Semantics sigma, const Pbaf* premises)
      : t_(t), sigma_(sigma), premises_(premises) {
    if (!premises_) return;
    // above_[x]: arguments whose premises include those of x. Accepting one
    // of them makes an exhaustive set accept x as well.
    above_.assign(t_.size(), ArgSet(t_.size()));
    for (std::size_t x = 0; x < t_.size(); ++x)
      for (std::size_t y = 0; y < t_.size(); ++y)
        if (premises_->premises(static_cast<ArgId>(x))
                .is_subset_of(premises_->premises(static_cast<ArgId>(y))))
          above_[x].set(y);
  }

  std::vector<ArgSet> run() {
    ArgSet in(t_.size()), out(t_.size());
    descend(std::move(in), std::move(out));
    return std::move(found_);
  }

 private:
  bool propagate(ArgSet& in, ArgSet& out) const {
    const Baf& baf = t_.baf();
    const bool needs_closed = sigma_ != Semantics::cf;
    const bool defended = sigma_ == Semantics::ad || sigma_ == Semantics::co;
    for (;;) {
      const ArgSet before_in = in, before_out = out;
      if (needs_closed) in = t_.closure(in);
      if (in.intersects(out)) return false;

      const ArgSet hit = range(baf, in);
      if (hit.intersects(in)) return false;
      out |= hit;
      for (auto a = in.find_first(); a != ArgSet::npos; a = in.find_next(a))
        out |= baf.attackers(static_cast<ArgId>(a));
      if (in.intersects(out)) return false;

      if (needs_closed) {
        ArgSet blocked = out;
        for (auto o = out.find_first(); o != ArgSet::npos; o = out.find_next(o))
          blocked |= t_.holders(static_cast<ArgId>(o));
        out = std::move(blocked);
        if (in.intersects(out)) return false;
      }

      const ArgSet possible = ~out;
      if (defended) {
        out |= ~t_.gamma(possible);
        if (in.intersects(out)) return false;
      }
      if (sigma_ == Semantics::co) in |= t_.gamma(in);
      if (sigma_ == Semantics::stb) in |= ~range(baf, possible);
      if (premises_ && defended) {
        const PremiseSet have = premises_->premises_of(in);
        for (std::size_t a = 0; a < t_.size(); ++a)
          if (premises_->premises(static_cast<ArgId>(a)).is_subset_of(have)) in.set(a);
        for (auto o = out.find_first(); o != ArgSet::npos; o = out.find_next(o))
          out |= above_[o];
      }
      if (in.intersects(out)) return false;
      if (in == before_in && out == before_out) return true;
    }
  }

  void descend(ArgSet in, ArgSet out) {
    if (!propagate(in, out)) return;
    const ArgSet open = ~(in | out);
    if (open.none()) {
      if (satisfies(t_, sigma_, in, premises_)) found_.push_back(std::move(in));
      return;
    }
    const auto pick = static_cast<ArgId>(choose(open));
    {
      ArgSet with = in;
      with.set(pick);
      descend(std::move(with), out);
    }
    out.set(pick);
    descend(std::move(in), std::move(out));
  }

  // Prefer arguments whose closure is large: deciding them fixes the most.
  std::size_t choose(const ArgSet& open) const {
    std::size_t best = open.find_first(), best_score = 0;
    for (auto a = open.find_first(); a != ArgSet::npos; a = open.find_next(a)) {
      const std::size_t score = (t_.single(static_cast<ArgId>(a)) & open).count() +
                                (t_.baf().attacked_by(static_cast<ArgId>(a)) & open).count();
      if (score > best_score) {
        best = a;
        best_score = score;
      }
    }
    return best;
  }

  const Tables& t_;
  Semantics sigma_;
  const Pbaf* premises_;
  std::vector<ArgSet> above_;
  std::vector<ArgSet> found_;
};

std::vector<ArgSet> maximal(std::vector<ArgSet> family) {
  std::vector<ArgSet> out;
  for (const auto& e : family) {
    bool dominated = false;
    for (const auto& f : family)
      if (e != f && e.is_subset_of(f)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(e);
  }
  return out;
}

std::vector<ArgSet> intersection_family(const std::vector<ArgSet>& complete, std::size_t n) {
  if (complete.empty()) return {ArgSet(n)};
  ArgSet meet = complete.front();
  for (const auto& e : complete) meet &= e;
  return {meet};
}

std::vector<ArgSet> extensions(const Baf& baf, Semantics sigma, const Pbaf* premises,
                               const Limits& limits) {
  check_guard(baf, limits);
  const Tables t(baf);
  std::vector<ArgSet> out;
  switch (sigma) {
    case Semantics::cf:
    case Semantics::ad:
    case Semantics::co:
    case Semantics::stb:
      out = Search(t, sigma, premises).run();
      break;
    case Semantics::pr:
      out = maximal(Search(t, Semantics::ad, premises).run());
      break;
    case Semantics::gr:
      out = intersection_family(Search(t, Semantics::co, premises).run(), baf.size());
      break;
  }
  canonicalize(out);
  return out;
}

bool is_member(const Baf& baf, Semantics sigma, const ArgSet& e, const Pbaf* premises,
               const Limits& limits) {
  if (e.size() != baf.size()) throw std::invalid_argument("extension size does not match framework");
  if (sigma == Semantics::pr || sigma == Semantics::gr)
    return contains_set(extensions(baf, sigma, premises, limits), e);
  return satisfies(Tables(baf), sigma, e, premises);
}

bool decide(const Baf& baf, Semantics sigma, Task task, const ArgSet& query, const Pbaf* premises,
            const Limits& limits) {
  switch (task) {
    case Task::cred:
    case Task::skept: {
      if (query.count() != 1) throw std::invalid_argument("acceptance query needs one argument");
      const auto a = query.find_first();
      const auto family = extensions(baf, sigma, premises, limits);
      if (task == Task::cred)
        return std::any_of(family.begin(), family.end(), [&](const ArgSet& e) { return e.test(a); });
      return std::all_of(family.begin(), family.end(), [&](const ArgSet& e) { return e.test(a); });
    }
    case Task::ver:
      return is_member(baf, sigma, query, premises, limits);
    case Task::enumerate:
      break;
  }
  throw std::invalid_argument("enumerate is not a decision task");
}

}  // namespace

bool baf_defends(const Baf& baf, const ArgSet& e, ArgId a, DefenseMode mode,
                 const Limits& limits) {
  if (mode == DefenseMode::closed_sets) return defends_closed_sets(baf, e, a, limits);
  const ArgSet hit = range(baf, e);
  const auto& att = baf.attackers(a);
  for (auto b = att.find_first(); b != ArgSet::npos; b = att.find_next(b)) {
    ArgSet one = baf.empty_set();
    one.set(b);
    if (!baf_closure(baf, one).intersects(hit)) return false;
  }
  return true;
}

ArgSet characteristic(const Baf& baf, const ArgSet& e) { return Tables(baf).gamma(e); }

std::vector<ArgSet> baf_extensions(const Baf& baf, Semantics sigma, const Limits& limits) {
  return extensions(baf, sigma, nullptr, limits);
}

bool baf_is_extension(const Baf& baf, Semantics sigma, const ArgSet& e, const Limits& limits) {
  return is_member(baf, sigma, e, nullptr, limits);
}

bool is_exhaustive(const Pbaf& pbaf, const ArgSet& e) {
  const PremiseSet have = pbaf.premises_of(e);
  for (std::size_t a = 0; a < pbaf.size(); ++a)
    if (!e.test(a) && pbaf.premises(static_cast<ArgId>(a)).is_subset_of(have)) return false;
  return true;
}

std::vector<ArgSet> pbaf_extensions(const Pbaf& pbaf, Semantics sigma, const Limits& limits) {
  return extensions(pbaf.baf(), sigma, &pbaf, limits);
}

bool pbaf_is_extension(const Pbaf& pbaf, Semantics sigma, const ArgSet& e, const Limits& limits) {
  return is_member(pbaf.baf(), sigma, e, &pbaf, limits);
}

bool baf_decide(const Baf& baf, Semantics sigma, Task task, const ArgSet& query,
                const Limits& limits) {
  return decide(baf, sigma, task, query, nullptr, limits);
}

bool pbaf_decide(const Pbaf& pbaf, Semantics sigma, Task task, const ArgSet& query,
                 const Limits& limits) {
  return decide(pbaf.baf(), sigma, task, query, &pbaf, limits);
}

std::vector<ArgSet> af_extensions(const Baf& baf, Semantics sigma, const Limits& limits) {
  if (baf.has_supports()) throw SupportsPresent();
  const std::size_t n = baf.size();
  const std::size_t limit = std::min<std::size_t>(limits.max_enumeration, 30);
  if (n > limit) throw TooLarge("enumeration-limit", n, limit);

  std::vector<Mask> att_in(n), att_out(n);
  for (std::size_t i = 0; i < n; ++i) {
    att_in[i] = to_mask(baf.attackers(static_cast<ArgId>(i)));
    att_out[i] = to_mask(baf.attacked_by(static_cast<ArgId>(i)));
  }
  auto plus = [&](Mask s) {
    Mask out = 0;
    for (Mask r = s; r; r &= r - 1) out |= att_out[static_cast<std::size_t>(__builtin_ctzll(r))];
    return out;
  };
  auto defended = [&](Mask s) {
    const Mask hit = plus(s);
    Mask out = 0;
    for (std::size_t a = 0; a < n; ++a)
      if ((att_in[a] & ~hit) == 0) out |= Mask{1} << a;
    return out;
  };
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  auto to_set = [&](Mask m) {
    ArgSet s(n);
    for (Mask r = m; r; r &= r - 1) s.set(static_cast<std::size_t>(__builtin_ctzll(r)));
    return s;
  };

  std::vector<ArgSet> out;
  if (sigma == Semantics::gr) {
    Mask g = 0;
    for (Mask next = defended(g); next != g; next = defended(g)) g = next;
    out.push_back(to_set(g));
    return out;
  }
  std::vector<Mask> admissible;
  for (Mask s = 0; s <= all; ++s) {
    const Mask hit = plus(s);
    const bool cf = (hit & s) == 0;
    if (cf) {
      if (sigma == Semantics::cf) out.push_back(to_set(s));
      if (sigma == Semantics::stb && (hit | s) == all) out.push_back(to_set(s));
      const Mask d = defended(s);
      if ((s & ~d) == 0) {
        if (sigma == Semantics::ad) out.push_back(to_set(s));
        if (sigma == Semantics::co && d == s) out.push_back(to_set(s));
        admissible.push_back(s);
      }
    }
    if (s == all) break;
  }
  if (sigma == Semantics::pr)
    for (Mask s : admissible) {
      bool top = true;
      for (Mask u : admissible)
        if (u != s && (s & ~u) == 0) top = false;
      if (top) out.push_back(to_set(s));
    }
  canonicalize(out);
  return out;
}

}  // namespace nfaba
