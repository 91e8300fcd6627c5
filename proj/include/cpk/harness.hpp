#ifndef CPK_HARNESS_HPP
#define CPK_HARNESS_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cpk/asteroidal.hpp"
#include "cpk/central_path.hpp"
#include "cpk/error.hpp"
#include "cpk/families.hpp"
#include "cpk/graph.hpp"
#include "cpk/path_ecc.hpp"
#include "cpk/star_c1p.hpp"

namespace cpk {

enum class Property {
  star_c1p_no_2at,            // *-C1P graphs have no 2-AT
  star_c1p_pe_at_most_2,      // *-C1P graphs have pe <= 2
  star_c1p_pe_at_most_1,      // conjectured: *-C1P graphs have pe <= 1
  kat_free_pe_bound,          // pe(G) <= min_k_at_free(G)
  at_free_pe_at_most_1,       // AT-free graphs have pe <= 1
  star_c1p_no_long_cycle,     // *-C1P graphs have no induced cycle of length >= 5
  order_lemma,                // ordering along induced paths is monotone
  path_neighborhood_lemma,    // neighborhood bounds around odd induced paths
  star_c1p_exists,            // every graph has the *-C1P (negative control)
  dichotomy,                  // constructive path-or-k-AT agrees with ground truth, k = 1..3
};

struct PropertyName {
  Property property;
  std::string_view name;
};

inline constexpr std::array<PropertyName, 10> kPropertyNames{{
    {Property::star_c1p_no_2at, "star_c1p_no_2at"},
    {Property::star_c1p_pe_at_most_2, "star_c1p_pe_at_most_2"},
    {Property::star_c1p_pe_at_most_1, "star_c1p_pe_at_most_1"},
    {Property::kat_free_pe_bound, "kat_free_pe_bound"},
    {Property::at_free_pe_at_most_1, "at_free_pe_at_most_1"},
    {Property::star_c1p_no_long_cycle, "star_c1p_no_long_cycle"},
    {Property::order_lemma, "order_lemma"},
    {Property::path_neighborhood_lemma, "path_neighborhood_lemma"},
    {Property::star_c1p_exists, "star_c1p_exists"},
    {Property::dichotomy, "dichotomy"},
}};

inline std::optional<Property> property_from_name(std::string_view name) {
  for (const auto& p : kPropertyNames)
    if (p.name == name) return p.property;
  return std::nullopt;
}

inline std::string_view property_name(Property p) {
  for (const auto& e : kPropertyNames)
    if (e.property == p) return e.name;
  return "unknown";
}

struct Violation {
  std::string graph6;
  std::string details;
};

/**
 * Outcome of one property over one corpus. `applicable` counts graphs where
 * the property's premise held (e.g. the graph has the *-C1P); `skipped`
 * counts graphs beyond a size guard or outside the property's domain.
 */
struct PropertyReport {
  std::string property;
  std::string corpus;
  long checked = 0;
  long applicable = 0;
  long skipped = 0;
  std::vector<Violation> violations;
  bool pass = true;
  double wall_seconds = 0;
};

struct Counterexample {
  std::string graph6;
  OrderingWitness witness;
  PeResult pe;
};

struct HuntResult {
  long searched = 0;
  long star_c1p = 0;
  long skipped = 0;
  std::optional<Counterexample> counterexample;
};

struct Corpus {
  std::string name;
  std::vector<Graph> graphs;
};

// ---------------------------------------------------------------------------
// Per-graph evaluation

namespace detail {

// Lazily computed facts shared by the properties evaluated on one graph.
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  bool connected() {
    if (!connected_) connected_ = g_.order() > 0 && is_connected(g_);
    return *connected_;
  }
  const std::optional<OrderingWitness>& star() {
    if (!star_) star_ = find_star_c1p(g_);
    return *star_;
  }
  const PeResult& pe() {
    if (!pe_) pe_ = pe_exact(g_);
    return *pe_;
  }
  int min_k() {
    if (!min_k_) min_k_ = min_k_at_free(g_);
    return *min_k_;
  }

 private:
  const Graph& g_;
  std::optional<bool> connected_;
  std::optional<std::optional<OrderingWitness>> star_;
  std::optional<PeResult> pe_;
  std::optional<int> min_k_;
};

struct Evaluation {
  bool skipped = false;
  bool applicable = false;
  std::optional<std::string> violation;
};

inline std::string describe(const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) s += (i ? "-" : "") + std::to_string(p.vertices[i]);
  return s;
}

inline std::string describe(const Triple& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

inline Evaluation evaluate_unchecked(Property prop, GraphFacts& f) {
  const Graph& g = f.graph();
  Evaluation e;
  auto need_connected = [&] {
    if (!f.connected()) e.skipped = true;
    return !e.skipped;
  };
  switch (prop) {
    case Property::star_c1p_no_2at:
      if (!f.star()) return e;
      e.applicable = true;
      if (auto at = find_k_at(g, 2)) e.violation = "2-AT " + describe(at->triple);
      return e;
    case Property::star_c1p_pe_at_most_2:
    case Property::star_c1p_pe_at_most_1: {
      if (!need_connected() || !f.star()) return e;
      e.applicable = true;
      const int bound = prop == Property::star_c1p_pe_at_most_2 ? 2 : 1;
      if (f.pe().value > bound) e.violation = "pe " + std::to_string(f.pe().value) + " via " + describe(f.pe().witness);
      return e;
    }
    case Property::kat_free_pe_bound:
      if (!need_connected()) return e;
      e.applicable = true;
      if (f.pe().value > f.min_k())
        e.violation = "pe " + std::to_string(f.pe().value) + " > min_k_at_free " + std::to_string(f.min_k());
      return e;
    case Property::at_free_pe_at_most_1:
      if (!need_connected() || f.min_k() != 1) return e;
      e.applicable = true;
      if (f.pe().value > 1) e.violation = "AT-free with pe " + std::to_string(f.pe().value);
      return e;
    case Property::star_c1p_no_long_cycle:
      if (!f.star()) return e;
      e.applicable = true;
      if (auto c = find_long_induced_cycle(g, 5)) e.violation = "induced cycle " + describe(Path(*c));
      return e;
    case Property::order_lemma:
      if (!f.star()) return e;
      e.applicable = true;
      for (const Path& p : induced_paths(g))
        if (!check_order_lemma(g, *f.star(), p)) {
          e.violation = "path " + describe(p);
          break;
        }
      return e;
    case Property::path_neighborhood_lemma:
      if (!f.star()) return e;
      e.applicable = true;
      for (const Path& p : induced_paths(g)) {
        if (p.length() % 2 == 0) continue;
        auto near = neighborhood_mask(g, p.vertices, 1);
        for (Vertex x = 0; x < g.order() && !e.violation; ++x)
          if (!near[static_cast<std::size_t>(x)] && !check_path_neighborhood_lemma(g, *f.star(), p, x))
            e.violation = "path " + describe(p) + " x " + std::to_string(x);
        if (e.violation) break;
      }
      return e;
    case Property::star_c1p_exists:
      e.applicable = true;
      if (!f.star()) e.violation = "no *-C1P witness";
      return e;
    case Property::dichotomy:
      if (!need_connected()) return e;
      e.applicable = true;
      for (int k = 1; k <= 3 && !e.violation; ++k) {
        auto d = find_k_dominating_path_or_witness(g, k);
        const bool want_path = k >= f.min_k();
        std::string tag = "k=" + std::to_string(k) + ": ";
        if (d.path.has_value() == d.witness.has_value())
          e.violation = tag + "not exactly one side";
        else if (d.path && path_eccentricity(g, *d.path) > k)
          e.violation = tag + "path " + describe(*d.path) + " has eccentricity > k";
        else if (d.witness && (d.witness->k != k || !verify_kat(g, *d.witness)))
          e.violation = tag + "witness does not verify";
        else if (d.path.has_value() != want_path)
          e.violation = tag + (want_path ? "witness returned for a k-AT-free graph" : "path returned for a graph with a k-AT");
        else if (d.path && !has_path_with_ecc_at_most(g, k))
          e.violation = tag + "exhaustive search finds no k-dominating path";
      }
      return e;
  }
  return e;
}

}  // namespace detail

/// Evaluates one property on one graph; size guards turn into `skipped`.
inline detail::Evaluation evaluate_property(Property prop, const Graph& g) {
  detail::GraphFacts f(g);
  try {
    return detail::evaluate_unchecked(prop, f);
  } catch (const size_limit_exceeded&) {
    return detail::Evaluation{true, false, std::nullopt};
  }
}

// ---------------------------------------------------------------------------
// Parallel ordered map

/// Worker count: CPK_THREADS if set and positive, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("CPK_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Applies `fn` to every index in [0, count) on up to `threads` workers and
 * returns the results in index order. The first exception thrown by any
 * call is rethrown after all workers stop.
 */
template <class T>
std::vector<T> parallel_ordered(std::size_t count, const std::function<T(std::size_t)>& fn, unsigned threads = thread_count()) {
  std::vector<T> out(count);
  threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next++) < count;) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

// ---------------------------------------------------------------------------
// Suite and hunt

/// One report per property, each holding violations in corpus order.
inline std::vector<PropertyReport> run_property_suite(const Corpus& corpus, std::span<const Property> props,
                                                      unsigned threads = thread_count()) {
  std::vector<PropertyReport> reports;
  for (Property prop : props) {
    auto start = std::chrono::steady_clock::now();
    auto evals = parallel_ordered<detail::Evaluation>(
        corpus.graphs.size(), [&](std::size_t i) { return evaluate_property(prop, corpus.graphs[i]); }, threads);
    PropertyReport r;
    r.property = std::string(property_name(prop));
    r.corpus = corpus.name;
    for (std::size_t i = 0; i < evals.size(); ++i) {
      const auto& e = evals[i];
      if (e.skipped) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      if (e.applicable) ++r.applicable;
      if (e.violation) r.violations.push_back({emit_graph6(corpus.graphs[i]), *e.violation});
    }
    r.pass = r.violations.empty();
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(r));
  }
  return reports;
}

/**
 * Searches the corpus for a connected *-C1P graph with pe >= threshold
 * (2 refutes the conjecture). The first such graph in corpus order is
 * returned with its witness and optimal path.
 */
inline HuntResult hunt_conjecture(const Corpus& corpus, int threshold = 2, unsigned threads = thread_count()) {
  struct Item {
    bool skipped = false;
    std::optional<OrderingWitness> star;
    std::optional<PeResult> pe;
  };
  auto items = parallel_ordered<Item>(
      corpus.graphs.size(),
      [&](std::size_t i) {
        const Graph& g = corpus.graphs[i];
        Item it;
        if (g.order() == 0 || !is_connected(g)) {
          it.skipped = true;
          return it;
        }
        try {
          it.star = find_star_c1p(g);
          if (it.star) it.pe = pe_exact(g);
        } catch (const size_limit_exceeded&) {
          it.skipped = true;
        }
        return it;
      },
      threads);
  HuntResult res;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].skipped) {
      ++res.skipped;
      continue;
    }
    ++res.searched;
    if (!items[i].star) continue;
    ++res.star_c1p;
    if (!res.counterexample && items[i].pe->value >= threshold)
      res.counterexample = Counterexample{emit_graph6(corpus.graphs[i]), *items[i].star, *items[i].pe};
  }
  return res;
}

/// Re-checks a counterexample from its graph6 code alone.
inline bool replay_counterexample(const Counterexample& c, int threshold = 2) {
  Graph g = parse_graph6(c.graph6);
  if (c.witness.rank.size() != static_cast<std::size_t>(g.order()) || !verify_witness(g, c.witness)) return false;
  return c.pe.value >= threshold && pe_exact(g).value == c.pe.value && is_path(g, c.pe.witness) &&
         path_eccentricity(g, c.pe.witness) == c.pe.value;
}

// ---------------------------------------------------------------------------
// Corpus loading

/// Graphs in a text document: an edge list (first token numeric) or graph6 lines.
inline std::vector<Graph> parse_graphs(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
    } else {
      break;
    }
  }
  if (i < text.size() && text[i] >= '0' && text[i] <= '9') return {parse_edge_list(text)};
  return parse_graph6_lines(text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

inline int to_int(std::string_view s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw invalid_input(what + ": expected an integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

/**
 * Corpus from a descriptor:
 *   exhaustive:N or exhaustive:A-B   connected graphs on N (A..B) vertices
 *   gen:FAMILY[:SIZE[:P[:SEED]]]     one generated graph
 *   anything else                    a file of graph6 lines or one edge list
 */
inline Corpus load_corpus(const std::string& descriptor) {
  Corpus c;
  c.name = descriptor;
  if (descriptor.rfind("exhaustive:", 0) == 0) {
    auto range = detail::split(std::string_view(descriptor).substr(11), '-');
    if (range.size() > 2) throw invalid_input("corpus: bad range " + descriptor);
    int lo = detail::to_int(range.front(), "corpus"), hi = detail::to_int(range.back(), "corpus");
    for (int n = lo; n <= hi; ++n) {
      auto gs = enumerate_connected(n);
      c.graphs.insert(c.graphs.end(), gs.begin(), gs.end());
    }
    return c;
  }
  if (descriptor.rfind("gen:", 0) == 0) {
    auto parts = detail::split(std::string_view(descriptor).substr(4), ':');
    auto fam = family_from_name(parts[0]);
    if (!fam) throw invalid_input("corpus: unknown family " + std::string(parts[0]));
    FamilySpec spec;
    spec.family = *fam;
    if (parts.size() > 1) spec.size = detail::to_int(parts[1], "corpus");
    if (parts.size() > 2) spec.probability = std::stod(std::string(parts[2]));
    if (parts.size() > 3) spec.seed = static_cast<std::uint64_t>(detail::to_int(parts[3], "corpus"));
    spec.connected = true;
    c.graphs = generate_corpus(spec);
    return c;
  }
  c.graphs = parse_graphs(read_file(descriptor));
  return c;
}

}  // namespace cpk

#endif  // CPK_HARNESS_HPP
