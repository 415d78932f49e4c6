#include "ekr/audit.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "ekr/bitset.hpp"
#include "ekr/error.hpp"
#include "ekr/parameters.hpp"

namespace ekr {

bool AuditReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

class Auditor {
 public:
  Auditor(const FamilySpec& spec, const AuditOptions& options) : lattice_(spec), options_(options) {}

  AuditReport run() {
    AuditReport report;
    report.spec = lattice_.spec();
    const int top = lattice_.top_rank();

    std::uint64_t total = 0;
    for (int i = 0; i <= top; ++i) {
      const BigInt size = alpha(lattice_.spec(), 0, i);
      if (size > options_.budget) overflow("enumerate", report.fiber_sizes, size);
      report.fiber_sizes.push_back(static_cast<std::uint64_t>(size));
      total += report.fiber_sizes.back();
    }
    fiber_sizes_ = report.fiber_sizes;
    spend("enumerate", total);
    if (BigInt(total) * total > options_.budget - used_) overflow("leq-matrix", fiber_sizes_, BigInt(total) * total);

    for (int i = 0; i <= top; ++i) {
      fiber_begin_.push_back(elements_.size());
      for (auto& e : lattice_.enumerate_fiber(i)) {
        ranks_.push_back(i);
        elements_.push_back(std::move(e));
      }
    }
    fiber_begin_.push_back(elements_.size());
    n_ = elements_.size();
    for (std::size_t i = 0; i < n_; ++i) index_.emplace(elements_[i], i);

    spend("leq-matrix", static_cast<std::uint64_t>(n_) * n_);
    lower_.assign(n_, Bitset(n_));
    upper_.assign(n_, Bitset(n_));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (lattice_.leq(elements_[a], elements_[b])) {
          upper_[a].set(b);
          lower_[b].set(a);
        }
    fiber_mask_.assign(top + 1, Bitset(n_));
    for (std::size_t a = 0; a < n_; ++a) fiber_mask_[ranks_[a]].set(a);

    const std::uint64_t words = (n_ + 63) / 64;
    const std::uint64_t pairs = static_cast<std::uint64_t>(n_) * n_;
    report.checks.push_back(timed("partial-order", pairs * words, [&](AuditCheck& c) { partial_order(c); }));
    report.checks.push_back(timed("meet-glb", pairs * (words + 1), [&](AuditCheck& c) { meet_glb(c); }));
    report.checks.push_back(timed("rank-covering", pairs * words, [&](AuditCheck& c) { rank_covering(c); }));
    report.checks.push_back(timed("mu", parameter_cost(), [&](AuditCheck& c) { check_mu(c); }));
    report.checks.push_back(timed("nu", parameter_cost(), [&](AuditCheck& c) { check_nu(c); }));
    report.checks.push_back(timed("theta", n_ * words, [&](AuditCheck& c) { check_theta(c); }));
    report.checks.push_back(timed("alpha-lemma", n_ * words * (top + 1), [&](AuditCheck& c) { check_alpha(c); }));
    report.checks.push_back(timed("join-rank", pairs * (words + 1), [&](AuditCheck& c) { join_rank(c); }));
    return report;
  }

 private:
  [[noreturn]] void overflow(const std::string& check, const std::vector<std::uint64_t>& sizes, const BigInt& need) {
    std::ostringstream msg;
    msg << "audit budget " << options_.budget << " exceeded at check '" << check << "' (needs " << need
        << "); fiber sizes:";
    for (auto s : sizes) msg << ' ' << s;
    throw BudgetExceeded(msg.str());
  }

  void spend(const std::string& check, std::uint64_t cost) {
    if (cost > options_.budget || used_ + cost > options_.budget) overflow(check, fiber_sizes_, BigInt(used_) + cost);
    used_ += cost;
  }

  std::uint64_t parameter_cost() const {
    const std::uint64_t words = (n_ + 63) / 64;
    const std::uint64_t levels = static_cast<std::uint64_t>(lattice_.top_rank() + 1);
    const std::uint64_t top_size = fiber_sizes_.back();
    return levels * n_ * std::max(top_size, levels) * words;
  }

  template <typename F>
  AuditCheck timed(const std::string& id, std::uint64_t cost, F&& body) {
    spend(id, cost);
    AuditCheck check;
    check.id = id;
    const auto start = std::chrono::steady_clock::now();
    body(check);
    check.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return check;
  }

  static void fail(AuditCheck& c, std::string detail, std::vector<Element> witness) {
    if (!c.passed) return;
    c.passed = false;
    c.detail = std::move(detail);
    c.counterexample = std::move(witness);
  }

  std::size_t index_of(const Element& e) const {
    const auto it = index_.find(e);
    return it == index_.end() ? n_ : it->second;
  }

  void partial_order(AuditCheck& c) {
    if (fiber_begin_[1] - fiber_begin_[0] != 1) fail(c, "rank-0 fiber is not a single least element", {});
    for (std::size_t a = 0; a < n_; ++a) {
      ++c.cases;
      if (!upper_[a].test(a)) fail(c, "leq is not reflexive", {elements_[a]});
      if (!upper_[0].test(a)) fail(c, "least element is not below every element", {elements_[0], elements_[a]});
      upper_[a].for_each([&](std::size_t b) {
        if (b != a && upper_[b].test(a)) fail(c, "leq is not antisymmetric", {elements_[a], elements_[b]});
        if (!upper_[b].subset_of(upper_[a])) fail(c, "leq is not transitive", {elements_[a], elements_[b]});
      });
    }
    if (lattice_.rank(elements_[0]) != 0 || elements_[0] != lattice_.least())
      fail(c, "least element does not have rank 0", {elements_[0]});
  }

  void meet_glb(AuditCheck& c) {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a; b < n_; ++b) {
        ++c.cases;
        const Element g = lattice_.meet(elements_[a], elements_[b]);
        const std::size_t gi = index_of(g);
        if (gi == n_) {
          fail(c, "meet is not an element of the lattice", {elements_[a], elements_[b], g});
          continue;
        }
        if (lattice_.meet(elements_[b], elements_[a]) != g) fail(c, "meet is not commutative", {elements_[a], elements_[b]});
        if (!lower_[a].test(gi) || !lower_[b].test(gi))
          fail(c, "meet is not a lower bound", {elements_[a], elements_[b], g});
        // Every common lower bound must lie below the meet.
        const Bitset common = lower_[a] & lower_[b];
        if (!common.subset_of(lower_[gi])) {
          std::size_t bad = n_;
          common.for_each([&](std::size_t z) {
            if (bad == n_ && !lower_[gi].test(z)) bad = z;
          });
          fail(c, "common lower bound not below meet", {elements_[a], elements_[b], g, elements_[bad]});
        }
      }
    }
  }

  void rank_covering(AuditCheck& c) {
    for (std::size_t a = 0; a < n_; ++a) {
      upper_[a].for_each([&](std::size_t b) {
        if (b == a) return;
        if (ranks_[b] <= ranks_[a]) fail(c, "rank does not increase along the order", {elements_[a], elements_[b]});
        if ((upper_[a] & lower_[b]).count() == 2) {
          ++c.cases;
          if (ranks_[b] != ranks_[a] + 1) fail(c, "covering step changes rank by more than one", {elements_[a], elements_[b]});
        }
      });
    }
  }

  std::string mismatch(const char* name, int r, int s, const BigInt& expected, std::size_t got) const {
    std::ostringstream out;
    out << name << "(" << r << "," << s << "): closed form " << expected << ", counted " << got;
    return out.str();
  }

  void check_mu(AuditCheck& c) {
    const int top = lattice_.top_rank();
    for (int r = 0; r <= top; ++r)
      for (int s = r; s <= top; ++s) {
        const BigInt expected = mu(lattice_.spec(), r, s);
        for (std::size_t y = fiber_begin_[top]; y < fiber_begin_[top + 1]; ++y)
          for (std::size_t z = fiber_begin_[r]; z < fiber_begin_[r + 1]; ++z) {
            if (!lower_[y].test(z)) continue;
            ++c.cases;
            const std::size_t got = (upper_[z] & lower_[y]).count_and(fiber_mask_[s]);
            if (got != expected) fail(c, mismatch("mu", r, s, expected, got), {elements_[z], elements_[y]});
          }
      }
  }

  void check_nu(AuditCheck& c) {
    const int top = lattice_.top_rank();
    for (int r = 0; r <= top; ++r)
      for (int s = r; s <= top; ++s) {
        const BigInt expected = nu(lattice_.spec(), r, s);
        for (std::size_t u = fiber_begin_[s]; u < fiber_begin_[s + 1]; ++u) {
          ++c.cases;
          const std::size_t got = lower_[u].count_and(fiber_mask_[r]);
          if (got != expected) fail(c, mismatch("nu", r, s, expected, got), {elements_[u]});
        }
      }
  }

  void check_theta(AuditCheck& c) {
    const int top = lattice_.top_rank();
    for (std::size_t a = 0; a < n_; ++a) {
      ++c.cases;
      const BigInt expected = theta(lattice_.spec(), ranks_[a]);
      const std::size_t got = upper_[a].count_and(fiber_mask_[top]);
      if (got != expected) fail(c, mismatch("theta", ranks_[a], ranks_[a], expected, got), {elements_[a]});
    }
  }

  void check_alpha(AuditCheck& c) {
    const int top = lattice_.top_rank();
    const auto& spec = lattice_.spec();
    for (int r = 0; r <= top; ++r)
      for (int s = r; s <= top; ++s) {
        BigInt expected;
        try {
          expected = alpha(spec, r, s);
        } catch (const DomainError& e) {
          fail(c, e.what(), {});
          continue;
        }
        if (expected * theta(spec, s) != theta(spec, r) * mu(spec, r, s))
          fail(c, mismatch("alpha", r, s, expected, 0) + " violates alpha*theta(s) = theta(r)*mu(r,s)", {});
        for (std::size_t u = fiber_begin_[r]; u < fiber_begin_[r + 1]; ++u) {
          ++c.cases;
          const std::size_t got = upper_[u].count_and(fiber_mask_[s]);
          if (got != expected) fail(c, mismatch("alpha", r, s, expected, got), {elements_[u]});
        }
      }
  }

  void join_rank(AuditCheck& c) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a; b < n_; ++b) {
        ++c.cases;
        const Bitset ub = upper_[a] & upper_[b];
        const auto joined = lattice_.join_bounded(elements_[a], elements_[b]);
        if (ub.none()) {
          if (joined) fail(c, "join returned although no upper bound exists", {elements_[a], elements_[b], *joined});
          continue;
        }
        std::size_t least = n_;
        ub.for_each([&](std::size_t l) {
          if (least == n_ && ub.subset_of(upper_[l])) least = l;
        });
        if (least == n_) {
          fail(c, "upper bounds have no least element", {elements_[a], elements_[b]});
          continue;
        }
        const int k = lattice_.rank(lattice_.meet(elements_[a], elements_[b]));
        if (ranks_[least] != ranks_[a] + ranks_[b] - k)
          fail(c, "least upper bound rank is not i+j-k", {elements_[a], elements_[b], elements_[least]});
        if (!joined || *joined != elements_[least])
          fail(c, "join_bounded disagrees with the least upper bound", {elements_[a], elements_[b], elements_[least]});
      }
  }

  Semilattice lattice_;
  AuditOptions options_;
  std::uint64_t used_ = 0;
  std::vector<std::uint64_t> fiber_sizes_;
  std::vector<Element> elements_;
  std::vector<int> ranks_;
  std::vector<std::size_t> fiber_begin_;
  std::map<Element, std::size_t> index_;
  std::size_t n_ = 0;
  std::vector<Bitset> lower_;
  std::vector<Bitset> upper_;
  std::vector<Bitset> fiber_mask_;
};

}  // namespace

AuditReport audit(const FamilySpec& spec, const AuditOptions& options) { return Auditor(spec, options).run(); }

}  // namespace ekr
