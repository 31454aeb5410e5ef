#include "lambdamap/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <string>
#include <thread>
#include <type_traits>

#include "lambdamap/bijection.hpp"
#include "lambdamap/graph.hpp"
#include "lambdamap/maps.hpp"
#include "lambdamap/term_ops.hpp"

namespace lambdamap {

namespace {

// Non-owning callable reference; the generator nests continuations deeply
// and std::function would allocate at every level.
class Continuation {
 public:
  template <typename F>
  Continuation(F& f) : object_(&f), call_([](void* o) { (*static_cast<F*>(o))(); }) {}  // NOLINT

  void operator()() const { call_(object_); }

 private:
  void* object_;
  void (*call_)(void*);
};

// A term with `size` applications+abstractions and `vars` free variables has
// (size + vars - 1) / 2 applications, so size + vars is odd and vars <= size + 1.
bool feasible(std::size_t size, std::size_t vars) { return vars <= size + 1 && (size + vars) % 2 == 1; }

// Writes canonical codes into a shared buffer. Each variable in scope is
// already a token: free_token(position) for context variables, the binder
// depth for bound ones.
class Generator {
 public:
  explicit Generator(std::size_t context_length) : context_length_(context_length) {}

  template <typename Visit>
  void run(std::size_t size, const std::vector<std::int32_t>& vars, Visit&& visit) {
    auto emit = [&] { visit(CanonicalTerm(context_length_, code_)); };
    gen(size, vars, 0, Continuation(emit));
  }

  // The top-level rule choices, for splitting work between threads.
  struct Job {
    bool abstraction;
    std::size_t left_size = 0;
    std::uint64_t mask = 0;
  };

  static std::vector<Job> jobs(std::size_t size, std::size_t vars) {
    std::vector<Job> out;
    if (!feasible(size, vars) || size == 0) return out;
    if (feasible(size - 1, vars + 1)) out.push_back({true});
    for (std::size_t n1 = 0; n1 < size; ++n1) {
      const std::size_t n2 = size - 1 - n1;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars); ++mask) {
        const auto k1 = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (feasible(n1, k1) && feasible(n2, vars - k1)) out.push_back({false, n1, mask});
      }
    }
    return out;
  }

  template <typename Visit>
  void run_job(std::size_t size, const std::vector<std::int32_t>& vars, const Job& job, Visit&& visit) {
    auto emit = [&] { visit(CanonicalTerm(context_length_, code_)); };
    const Continuation k(emit);
    if (job.abstraction) {
      abstraction(size, vars, 0, k);
    } else {
      application(job.left_size, size - 1 - job.left_size, vars, job.mask, 0, k);
    }
  }

 private:
  void gen(std::size_t size, const std::vector<std::int32_t>& vars, std::int32_t depth, Continuation k) {
    if (!feasible(size, vars.size())) return;
    if (size == 0) {
      code_.push_back(vars.front());
      k();
      code_.pop_back();
      return;
    }
    if (feasible(size - 1, vars.size() + 1)) abstraction(size, vars, depth, k);
    for (std::size_t n1 = 0; n1 < size; ++n1) {
      const std::size_t n2 = size - 1 - n1;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
        application(n1, n2, vars, mask, depth, k);
      }
    }
  }

  void abstraction(std::size_t size, const std::vector<std::int32_t>& vars, std::int32_t depth, Continuation k) {
    std::vector<std::int32_t> inner = vars;
    inner.push_back(depth);
    code_.push_back(CanonicalTerm::abstraction);
    gen(size - 1, inner, depth + 1, k);
    code_.pop_back();
  }

  void application(std::size_t n1, std::size_t n2, const std::vector<std::int32_t>& vars, std::uint64_t mask,
                   std::int32_t depth, Continuation k) {
    const auto k1 = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (!feasible(n1, k1) || !feasible(n2, vars.size() - k1)) return;
    std::vector<std::int32_t> left;
    std::vector<std::int32_t> right;
    for (std::size_t i = 0; i < vars.size(); ++i) ((mask >> i) & 1 ? left : right).push_back(vars[i]);
    code_.push_back(CanonicalTerm::application);
    auto then_argument = [&] { gen(n2, right, depth, k); };
    gen(n1, left, depth, Continuation(then_argument));
    code_.pop_back();
  }

  std::size_t context_length_;
  std::vector<std::int32_t> code_;
};

std::vector<std::int32_t> context_tokens(std::size_t free_variables) {
  std::vector<std::int32_t> vars;
  for (std::size_t i = 0; i < free_variables; ++i) vars.push_back(CanonicalTerm::free_token(i));
  return vars;
}

// Runs `per_job(generator, job, slot)` over all top-level jobs on up to
// `workers` threads; slots are indexed by job so results merge in order.
template <typename Slot, typename PerJob>
std::vector<Slot> run_jobs(std::size_t size, std::size_t free_variables, unsigned workers, PerJob per_job) {
  const auto jobs = Generator::jobs(size, free_variables);
  std::vector<Slot> slots(jobs.size());
  if (size == 0) {
    // The single variable term has no top-level rule choice.
    slots.resize(1);
    Generator g(free_variables);
    per_job(g, nullptr, slots[0]);
    return slots;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Generator g(free_variables);
    for (std::size_t i = next++; i < jobs.size(); i = next++) per_job(g, &jobs[i], slots[i]);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return slots;
}

template <typename Visit>
void visit_job(Generator& g, std::size_t size, std::size_t free_variables, const Generator::Job* job,
               Visit&& visit) {
  const auto vars = context_tokens(free_variables);
  if (job == nullptr) {
    g.run(size, vars, visit);
  } else {
    g.run_job(size, vars, *job, visit);
  }
}

}  // namespace

std::string_view to_string(TermFilter f) noexcept {
  switch (f) {
    case TermFilter::all:
      return "all";
    case TermFilter::indecomposable:
      return "indecomposable";
    case TermFilter::planar:
      return "planar";
    case TermFilter::planar_indecomposable:
      return "planar-indecomposable";
    case TermFilter::bridgeless_map:
      return "bridgeless-map";
  }
  return "all";
}

std::optional<TermFilter> parse_filter(std::string_view name) noexcept {
  for (TermFilter f : {TermFilter::all, TermFilter::indecomposable, TermFilter::planar,
                       TermFilter::planar_indecomposable, TermFilter::bridgeless_map}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

bool passes_filter(const CanonicalTerm& t, TermFilter filter) {
  if (filter == TermFilter::all) return true;
  const LinearTerm term = from_canonical(t);
  switch (filter) {
    case TermFilter::all:
      return true;
    case TermFilter::indecomposable:
      return !is_decomposable(term);
    case TermFilter::planar:
      return genus(term_to_map(lambda_lift(term))) == 0;
    case TermFilter::planar_indecomposable:
      return !is_decomposable(term) && genus(term_to_map(lambda_lift(term))) == 0;
    case TermFilter::bridgeless_map:
      return is_bridgeless(term_to_map(lambda_lift(term)));
  }
  return false;
}

std::vector<CanonicalTerm> enumerate_terms(std::size_t size, std::size_t free_variables, TermFilter filter,
                                           EnumerationOptions options) {
  auto slots = run_jobs<std::vector<CanonicalTerm>>(
      size, free_variables, options.workers,
      [&](Generator& g, const Generator::Job* job, std::vector<CanonicalTerm>& out) {
        visit_job(g, size, free_variables, job, [&](const CanonicalTerm& t) {
          if (passes_filter(t, filter)) out.push_back(t);
        });
      });
  std::vector<CanonicalTerm> all;
  for (auto& slot : slots) {
    all.insert(all.end(), std::make_move_iterator(slot.begin()), std::make_move_iterator(slot.end()));
  }
  std::sort(all.begin(), all.end(),
            [](const CanonicalTerm& a, const CanonicalTerm& b) { return a.code() < b.code(); });
  return all;
}

std::uint64_t count_terms(std::size_t size, std::size_t free_variables, TermFilter filter,
                          EnumerationOptions options) {
  const auto slots = run_jobs<std::uint64_t>(
      size, free_variables, options.workers, [&](Generator& g, const Generator::Job* job, std::uint64_t& count) {
        visit_job(g, size, free_variables, job, [&](const CanonicalTerm& t) {
          if (passes_filter(t, filter)) ++count;
        });
      });
  std::uint64_t total = 0;
  for (auto c : slots) total += c;
  return total;
}

void for_each_term(std::size_t size, std::size_t free_variables,
                   const std::function<void(const CanonicalTerm&)>& visit) {
  Generator g(free_variables);
  g.run(size, context_tokens(free_variables), visit);
}

unsigned workers_from_environment() {
  const char* raw = std::getenv("LAMBDAMAP_WORKERS");
  if (raw == nullptr) return 1;
  const std::string_view text(raw);
  unsigned value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0) return 1;
  return value;
}

}  // namespace lambdamap
