// Acceptance suite: one criterion per block, one pass/fail line each.
// Usage: acceptance [path-to-scrollcalc]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scrolls/classify.hpp"
#include "scrolls/crosscheck.hpp"
#include "scrolls/families.hpp"
#include "scrolls/invariants.hpp"
#include "scrolls/schubert.hpp"
#include "scrolls/tableau.hpp"

using namespace scrolls;

namespace {

struct Criterion {
  int id;
  std::string description;
  bool pass = true;
  std::vector<std::string> notes;
  double ms = 0;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void require_time(double limit_ms) {
    require(ms < limit_ms, "took " + std::to_string(ms) + " ms, limit " +
                               std::to_string(limit_ms) + " ms");
  }
};

double run_timed(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

Int partition_count_dp(long k) {
  // Bounded-part recurrence, independent of the library's pentagonal route.
  std::map<std::pair<long, long>, Int> memo;
  std::function<Int(long, long)> rec = [&](long rest, long cap) -> Int {
    if (rest == 0) return 1;
    if (rest < 0 || cap == 0) return 0;
    auto it = memo.find({rest, cap});
    if (it != memo.end()) return it->second;
    Int value = rec(rest - cap, cap) + rec(rest, cap - 1);
    return memo.emplace(std::make_pair(rest, cap), value).first->second;
  };
  return k < 0 ? Int(0) : rec(k, k);
}

int run_cli(const std::string& command, std::string& output) {
  std::string capture = "/tmp/scrollcalc_acceptance_output.txt";
  int status = std::system((command + " > " + capture + " 2>&1").c_str());
  std::ifstream in(capture);
  std::stringstream buffer;
  buffer << in.rdbuf();
  output = buffer.str();
  std::remove(capture.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path = argc > 1 ? argv[1] : "";
  std::vector<Criterion> results;

  auto criterion = [&](int id, const std::string& description,
                       const std::function<void(Criterion&)>& body) {
    Criterion c{id, description, true, {}, 0};
    try {
      c.ms = run_timed([&] { body(c); });
    } catch (const std::exception& e) {
      c.pass = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    results.push_back(std::move(c));
  };

  // 1. Quadric by both oracles, under a millisecond.
  criterion(1, "quadric {3 P^1} in P^3: degree 2, genus 0, both oracles, < 1 ms", [](Criterion& c) {
    IncidenceBase quadric(3, {1, 1, 1});
    (void)curve_class_degree(quadric);  // warm the allocator and caches
    (void)count_fillings(quadric);
    (void)genus_for_base(quadric);
    double ms = run_timed([&] {
      c.require(curve_class_degree(quadric) == 2, "pieri degree != 2");
      c.require(count_fillings(quadric) == 2, "tableau degree != 2");
      c.require(*genus_for_base(quadric) == 0, "genus != 0");
    });
    c.ms = ms;
    c.require(ms < 1.0, "took " + std::to_string(ms) + " ms, limit 1 ms");
  });

  // 2. Elliptic quintic with its minimal directrix.
  criterion(2, "elliptic quintic {5 P^2} in P^4: degree 5, genus 1, directrix 3, < 1 ms",
            [](Criterion& c) {
    IncidenceBase quintic(4, {2, 2, 2, 2, 2});
    (void)curve_class_degree(quintic);
    (void)fundamental_invariants(4);
    double ms = run_timed([&] {
      auto inv = fundamental_invariants(4);
      c.require(curve_class_degree(quintic) == 5, "pieri degree != 5");
      c.require(inv.degree == 5, "closed-form degree != 5");
      c.require(inv.genus == 1, "genus != 1");
      c.require(*inv.min_directrix_degree == 3, "directrix degree != 3");
    });
    c.ms = ms;
    c.require(ms < 1.0, "took " + std::to_string(ms) + " ms, limit 1 ms");
  });

  // 3. Fundamental table equals the Catalan numbers; the Pieri fold
  //    reproduces the closed form for n <= 8.
  criterion(3, "fundamental degrees are Catalan (n = 3..10), Pieri-checked for n <= 8, < 10 s",
            [](Criterion& c) {
    const long expected[] = {2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int n = 3; n <= 10; ++n) {
      auto inv = fundamental_invariants(n);
      c.require(inv.degree == expected[n - 3],
                "d(" + std::to_string(n) + ") != " + std::to_string(expected[n - 3]));
      c.require(inv.degree == catalan(n - 1), "closed form is not the Catalan number");
      if (n <= 8) {
        IncidenceBase base(n, std::vector<int>(2 * n - 3, n - 2));
        c.require(curve_class_degree(base) == inv.degree,
                  "pieri fold mismatch at n=" + std::to_string(n));
      }
    }
    c.require_time(10000.0);
  });

  // 4. Genus-degree relation from the canonical class.
  criterion(4, "2g(n)-2 = (n-4) d(n) exactly for n = 4..10", [](Criterion& c) {
    for (int n = 4; n <= 10; ++n) {
      auto inv = fundamental_invariants(n);
      c.require(2 * inv.genus - 2 == Int(n - 4) * inv.degree,
                "relation fails at n=" + std::to_string(n));
    }
  });

  // 5. Two-oracle degree agreement over the exhaustive catalogs.
  criterion(5, "pieri and tableau degrees agree on every base of P^3..P^7, < 2 min",
            [](Criterion& c) {
    long bases = 0;
    for (int n = 3; n <= 7; ++n) {
      for (const auto& base : catalog(n)) {
        ++bases;
        if (curve_class_degree(base) != count_fillings(base))
          c.require(false, "oracle mismatch on " + base.to_string());
      }
    }
    c.require(bases > 50, "catalog sweep unexpectedly small");
    c.require_time(120000.0);
  });

  // 6. Standard-family recursion vs the Pieri fold, with the spot values.
  criterion(6, "standard-family recursion degree = Pieri degree for n <= 7; spot values",
            [](Criterion& c) {
    for (int n = 3; n <= 7; ++n) {
      for (const auto& key : standard_keys(n)) {
        // standard_family_invariants raises ConsistencyFault on any mismatch.
        (void)standard_family_invariants(key);
      }
    }
    auto cubic = standard_family_invariants(StandardFamilyKey{4, {1}});
    c.require(cubic.degree == 3 && cubic.genus == 0, "B(4,[1]) != (3, 0)");
    auto nine = standard_family_invariants(StandardFamilyKey{5, {1}});
    c.require(nine.degree == 9 && nine.genus == 3, "B(5,[1]) != (9, 3)");
  });

  // 7. Delta closed forms against the Pieri numbers of their cycle lists.
  criterion(7, "Delta closed forms = Pieri numbers, r <= 6 (e >= 1 family: e <= 2, j <= 2), < 5 min",
            [](Criterion& c) {
    for (int r = 1; r <= 6; ++r) {
      for (const auto& h : e0_param_sweep(r)) (void)delta_e0(r, h);
      for (const auto& h : enot0_param_sweep(r)) (void)delta_enot0(r, h);
      for (int e = 0; e <= 2; ++e)
        for (int j = 1 - e; j <= 2; ++j)
          for (const auto& h : ege1_param_sweep(r, e, j)) (void)delta_ege1(r, e, j, h);
    }
    for (int r = 2; r <= 6; ++r) {
      std::vector<int> one{1};
      c.require(delta_e0(r, one) == r + 1, "Delta_e0(r,(1)) != r+1");
      for (int h1 = 2; h1 < r; ++h1) {
        std::vector<int> pair{h1, 1};
        c.require(delta_e0(r, pair) == Int(h1) * (r - h1 + 2),
                  "Delta_e0(r,(h,1)) != h(r-h+2)");
        c.require(delta_enot0(r, pair) == r - h1 + 2, "Delta_enot0(r,(h,1)) != r-h+2");
      }
    }
    for (int r = 3; r <= 6; ++r) {
      std::vector<int> h01{0, 1};
      c.require(delta_ege1(r, 1, 1, h01) == r, "Delta_ege1(r,1,1,(0,1)) != r-e+1");
      if (r >= 4) c.require(delta_ege1(r, 2, 1, h01) == r - 1, "Delta_ege1 at e=2 off");
    }
    c.require_time(300000.0);
  });

  // 8. The linearly-trivial family's closed degrees and genera.
  criterion(8, "e~0 family: d = 2h(r-h+1), g = (r-h)(h-1) for h < r <= 8; d(r,(2,1)) = 4r-4",
            [](Criterion& c) {
    for (int r = 2; r <= 8; ++r) {
      for (int h = 1; h <= r - 1; ++h) {
        auto res = h == 1 ? invariants_e0(r, std::vector<int>{1})
                          : invariants_e0(r, std::vector<int>{h, 1});
        c.require(res.invariants.degree == Int(2 * h) * (r - h + 1),
                  "degree off at r=" + std::to_string(r) + ", h=" + std::to_string(h));
        c.require(res.invariants.genus == Int(r - h) * (h - 1),
                  "genus off at r=" + std::to_string(r) + ", h=" + std::to_string(h));
        c.require(res.consistent(), "formula check failed");
      }
      if (r >= 3) {
        auto special = invariants_e0(r, std::vector<int>{2, 1});
        c.require(special.invariants.degree == 4 * r - 4, "d(r,(2,1)) != 4r-4");
        c.require(special.invariants.genus == r - 2, "g(r,(2,1)) != r-2");
      }
    }
  });

  // 9. Partition bijection with an independent count.
  criterion(9, "distinct e~0 bases in P^{2r+1} number p(r-1) for r <= 10", [](Criterion& c) {
    for (int r = 1; r <= 10; ++r) {
      std::set<IncidenceBase> distinct;
      for (const auto& lambda : partitions_of(r - 1))
        distinct.insert(base_from_partition_e0(r, lambda));
      c.require(Int(distinct.size()) == partition_count_dp(r - 1),
                "count != p(r-1) at r=" + std::to_string(r));
      c.require(count_e0_scrolls(r) == partition_count_dp(r - 1),
                "library p disagrees with the independent recurrence");
    }
  });

  // 10. The genus-0/1 classification over the model grid.
  criterion(10, "classification matches the five conditions on g in {0,1}, -1 <= e <= 5, m <= 8",
            [](Criterion& c) {
    long models = 0;
    for (int g = 0; g <= 1; ++g) {
      for (int e = -1; e <= 5; ++e) {
        for (int m = 1; m <= 8; ++m) {
          for (bool e_triv : {false, true}) {
            if (e_triv && e != 0) continue;
            if (g == 0 && !e_triv && e == 0) continue;
            if (g == 0 && (e < 0 || m < e + 1)) continue;
            if (g == 1 && e == -1 && m < 2) continue;
            if (g == 1 && e == 0 && m < 3) continue;
            if (g == 1 && e >= 1 && m < e + 3) continue;
            ++models;
            ScrollModel model{g, e, m, 0, 0, e_triv};
            bool expected = (g == 0 && (e == 0 || e == 1)) || (g == 0 && m == e + 1) ||
                            (g == 1 && e == -1 && m == 2) || (g == 1 && e_triv && m == 4) ||
                            (g == 1 && !e_triv && e >= 0 && e <= 3 && m == e + 3);
            auto verdict = classify_g01(model);
            std::string tag = "(g=" + std::to_string(g) + ", e=" + std::to_string(e) +
                              ", m=" + std::to_string(m) + (e_triv ? ", e~0)" : ")");
            c.require(verdict.incidence == expected, "verdict mismatch at " + tag);
            if (verdict.incidence) {
              c.require(verdict.base->is_valid(), "yes-base fails IS at " + tag);
              c.require(curve_class_degree(*verdict.base) == model.degree(),
                        "yes-base degree != 2m-e at " + tag);
            }
          }
        }
      }
    }
    c.require(models > 50, "model grid unexpectedly small");
  });

  // 11. Elementary transform bookkeeping across the catalogs.
  criterion(11, "transform keeps IS and drops the Pieri degree by one on P^4..P^6",
            [](Criterion& c) {
    long applicable = 0;
    for (int n = 4; n <= 6; ++n) {
      for (const auto& base : catalog(n)) {
        const auto& dims = base.dims();
        if (dims.size() < 3 || dims[2] < 1 || dims[0] + dims[1] != n - 1) continue;
        ++applicable;
        auto moved = elementary_transform(base);
        if (!moved.is_valid()) c.require(false, "transform broke IS on " + base.to_string());
        if (curve_class_degree(moved) != curve_class_degree(base) - 1)
          c.require(false, "degree did not drop by one on " + base.to_string());
      }
    }
    c.require(applicable >= 5, "transform sweep unexpectedly small");
  });

  // 12. The crosscheck CLI: clean run exits 0, an injected fault exits 1 and
  //     names the offending tuple.
  criterion(12, "scrollcalc crosscheck --scope full exits 0; --inject-fault exits 1 with the tuple",
            [&](Criterion& c) {
    if (cli_path.empty()) {
      c.require(false, "no scrollcalc path supplied (pass it as argv[1])");
      return;
    }
    std::string output;
    int clean = run_cli(cli_path + " crosscheck --scope full", output);
    c.require(clean == 0, "clean crosscheck exited " + std::to_string(clean));
    int faulty = run_cli(cli_path + " crosscheck --scope quick --inject-fault", output);
    c.require(faulty == 1, "fault injection exited " + std::to_string(faulty));
    c.require(output.find("MISMATCH") != std::string::npos &&
                  output.find("e0 r=1 h=(1)") != std::string::npos,
              "fault report does not name the offending tuple");
  });

  bool all_pass = true;
  for (const auto& c : results) {
    all_pass = all_pass && c.pass;
    std::printf("[%s] criterion %2d: %s (%.2f ms)\n", c.pass ? "PASS" : "FAIL", c.id,
                c.description.c_str(), c.ms);
    for (const auto& note : c.notes) std::printf("        - %s\n", note.c_str());
  }
  std::printf("%s: %zu/%zu criteria\n", all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              results.size() - std::count_if(results.begin(), results.end(),
                                             [](const Criterion& c) { return !c.pass; }),
              results.size());
  return all_pass ? 0 : 1;
}
