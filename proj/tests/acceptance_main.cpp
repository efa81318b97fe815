#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracle/oracles.hpp"
#include "support.hpp"
#include "threeplane/census.hpp"
#include "threeplane/certificate.hpp"
#include "threeplane/constraints.hpp"
#include "threeplane/generators.hpp"
#include "threeplane/saturate.hpp"

using namespace threeplane;
using testing_support::corpus;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string joined(const std::ostringstream& out) {
  std::string s = out.str();
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "; ") == 0) s.resize(s.size() - 2);
  return s;
}

using Corpus = std::vector<std::pair<std::string, Drawing>>;

Outcome density(const Corpus& drawings) {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& [name, d] : drawings) {
    for (int t : {1, 2, 5}) {
      ++checks;
      Rational lib = density_residual(d, t);
      mpq_class ref = oracle::density_residual(d, t);
      if (lib != 0 || ref != 0) {
        o.pass = false;
        o.detail = name + " t=" + std::to_string(t) + " residual " + to_string(lib) + " (oracle " + ref.get_str() + ")";
        return o;
      }
    }
  }
  o.detail = std::to_string(drawings.size()) + " drawings, " + std::to_string(checks) + " evaluations, all zero";
  return o;
}

Outcome symbolic() {
  Outcome o;
  std::ostringstream out;
  for (Target t : {Target::edges, Target::crossings}) {
    SymbolicResult r = verify_symbolic(builtin_certificate(t));
    auto ref = oracle::certificate_residual(std::string(name(t)));
    std::map<std::string, Rational> lib(r.residual.terms().begin(), r.residual.terms().end());
    std::map<std::string, Rational> expected(ref.begin(), ref.end());
    if (lib != expected) {
      o.pass = false;
      out << name(t) << ": implementation and oracle disagree; ";
      continue;
    }
    if (!r.exact()) {
      o.pass = false;
      out << name(t) << " residual " << to_string(r.residual) << " (oracle agrees); ";
    } else {
      out << name(t) << " residual 0; ";
    }
  }
  o.detail = joined(out);
  return o;
}

Outcome constraint_suite() {
  Outcome o;
  std::map<std::string, int> post_failures, pre_failures;
  std::string first;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    const int n = 6 + s % 9;
    Drawing d = random_drawing(n, 4 * n, static_cast<std::uint64_t>(s));
    for (const auto& row : evaluate_constraints(census(d), false).rows) {
      if (row.applicable && !row.pass) ++pre_failures[row.id];
    }
    Drawing sat = saturate(d);
    if (!is_3saturated(sat)) {
      ++post_failures["not-saturated"];
      continue;
    }
    for (const auto& row : evaluate_constraints(census(sat), true).rows) {
      if (!row.pass) {
        ++post_failures[row.id];
        if (first.empty()) {
          first = "seed " + std::to_string(s) + " row " + row.id + " lhs " + to_string(row.lhs) + " rhs " +
                  to_string(row.rhs);
        }
      }
    }
  }
  std::ostringstream out;
  out << seeds << " seeds";
  if (pre_failures.empty() && post_failures.empty()) {
    out << ", every row passes";
  } else {
    o.pass = false;
    for (const auto& [id, k] : pre_failures) out << "; unsaturated " << id << " fails on " << k << " seeds";
    for (const auto& [id, k] : post_failures) out << "; saturated " << id << " fails on " << k << " seeds";
    if (!first.empty()) out << "; first witness " << first;
  }
  o.detail = out.str();
  return o;
}

Outcome tightness() {
  Outcome o;
  std::ostringstream out;
  for (int L = 1; L <= 4; ++L) {
    Drawing raw = gen_fig3(L);
    DrawingStats s = stats(raw);
    const std::int64_t n = 6 * (L + 1);
    bool counts = s.n == n && 2 * s.edges == 11 * n - 30 && 2 * s.crossings == 11 * n - 42;
    Drawing sat = saturate(raw);
    NumericResult x = verify_numeric(sat, Target::crossings);
    NumericResult e = verify_numeric(sat, Target::edges);
    Rational raw_slack = x.bound - Rational(s.crossings);
    bool ok = counts && x.within_bound() && raw_slack == 10 && e.within_bound() && x.decomposition_holds &&
              e.decomposition_holds;
    out << "L=" << L << " n=" << n << " |E|=" << s.edges << " |X|=" << s.crossings << " slack(X)=" << to_string(raw_slack)
        << " slack(E)=" << to_string(e.total_slack) << (ok ? "" : " BAD") << "; ";
    o.pass = o.pass && ok;
  }
  o.detail = joined(out);
  return o;
}

Outcome trail_partition(const Corpus& drawings) {
  Outcome o;
  for (const auto& [name, d] : drawings) {
    Arrangement a(d);
    DrawingStats s = stats(d);
    std::vector<int> owner(a.map().segment_count(), 0);
    std::int64_t total = 0;
    for (const auto& t : a.trails()) {
      total += static_cast<std::int64_t>(t.interior_segments.size());
      for (int seg : t.interior_segments) ++owner[seg];
    }
    bool ok = total == s.by_crossings[2] + 2 * s.by_crossings[3];
    for (std::size_t seg = 0; seg < owner.size(); ++seg) ok = ok && owner[seg] == (a.is_inner(static_cast<int>(seg)) ? 1 : 0);
    if (!ok) {
      o.pass = false;
      o.detail = name;
      return o;
    }
  }
  o.detail = std::to_string(drawings.size()) + " drawings";
  return o;
}

Outcome structural(const Corpus& drawings) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, d] : drawings) {
    if (!validate(d).valid()) continue;
    ++checked;
    CensusCounts c = census(d);
    oracle::FaceTally f = oracle::trace_faces(d);
    const std::int64_t E = c.stats.edges, X = c.stats.crossings, V = c.stats.n;
    bool ok = c.size_sum == 4 * (E + X) && c.cell_count == 2 - V - X + E + 2 * X && f.faces == c.cell_count &&
              f.size_sum == c.size_sum;
    if (!ok) {
      o.pass = false;
      o.detail = name;
      return o;
    }
  }
  o.detail = std::to_string(checked) + " valid drawings";
  return o;
}

Outcome saturation(const Corpus& drawings) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, d] : drawings) {
    if (!validate(d).valid() || d.vertices.size() < 3) continue;
    ++checked;
    Drawing s = saturate(d);
    bool ok = is_3saturated(s) && s.vertices == canonical(d).vertices && s.crossing_ids() == d.crossing_ids() &&
              saturate(s) == s;
    if (!ok) {
      o.pass = false;
      o.detail = name;
      return o;
    }
  }
  Drawing path = saturate(gen_basic("path3"));
  const EdgeRecord* added = path.find_edge("s0");
  bool path_ok = path.edges.size() == 3 && added != nullptr &&
                 std::set<std::string>{added->ends[0], added->ends[1]} == std::set<std::string>{"u", "w"} &&
                 cells(path).size() == 2;
  if (!path_ok) {
    o.pass = false;
    o.detail = "path3 did not become a triangle";
    return o;
  }
  o.detail = std::to_string(checked) + " drawings; path3 closes to a triangle";
  return o;
}

Outcome geometry() {
  Outcome o;
  std::int64_t crossings = 0;
  for (int s = 0; s < 50; ++s) {
    const int n = 5 + s % 12;
    GeometricScene scene = random_scene(n, 3 * n, 1000 + static_cast<std::uint64_t>(s));
    Drawing d = ingest_geometry(scene);
    std::int64_t brute = oracle::brute_force_crossings(scene);
    crossings += brute;
    if (static_cast<std::int64_t>(d.crossing_ids().size()) != brute || !validate(d).valid()) {
      o.pass = false;
      o.detail = "scene " + std::to_string(s);
      return o;
    }
  }
  o.detail = "50 scenes, " + std::to_string(crossings) + " crossings";
  return o;
}

Outcome zero_trails(const Corpus& drawings) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, d] : drawings) {
    if (!validate(d).valid()) continue;
    std::vector<Drawing> forms{d};
    if (d.vertices.size() >= 3) forms.push_back(saturate(d));
    for (const Drawing& f : forms) {
      ++checked;
      TrailCounts t = trail_counts(Arrangement(f).trails());
      if (t.get(CellType::vtri, CellType::vtri) != 0 || t.get(CellType::vtri, CellType::xtri) != 0) {
        o.pass = false;
        o.detail = name;
        return o;
      }
    }
  }
  o.detail = std::to_string(checked) + " drawings";
  return o;
}

}  // namespace

int main() {
  const Corpus drawings = corpus(200);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"density formula identity", [&] { return density(drawings); }},
      {"symbolic certificate", [] { return symbolic(); }},
      {"constraint suite", [] { return constraint_suite(); }},
      {"tightness family", [] { return tightness(); }},
      {"trail partition", [&] { return trail_partition(drawings); }},
      {"structural identities", [&] { return structural(drawings); }},
      {"saturation contract", [&] { return saturation(drawings); }},
      {"geometry oracle", [] { return geometry(); }},
      {"zero trail types", [&] { return zero_trails(drawings); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& err) {
      o.pass = false;
      o.detail = std::string("exception: ") + err.what();
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
