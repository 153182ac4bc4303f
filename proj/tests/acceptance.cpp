// Acceptance gate: runs every golden verification case and reports the
// twelve acceptance criteria, one line each.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "planes/verify.hpp"

int main() {
  const std::vector<std::pair<std::string, std::vector<std::string>>> criteria =
      {
          {"1. explicit determinantal example: member, rank 9, relation, q-rank 4",
           {"determinantal.membership", "determinantal.relation"}},
          {"2. tritangent example 1: member, cubic, two A2 points",
           {"tritangent.ex1.relation", "tritangent.ex1.cubic",
            "tritangent.ex1.singular", "tritangent.ex1.ade",
            "tritangent.discriminant"}},
          {"3. tritangent example 2: cubic, unique A5 point",
           {"tritangent.ex2.cubic", "tritangent.ex2.singular",
            "tritangent.ex2.ade"}},
          {"4. Cayley family: membership, relation, cubic identity, "
           "non-isolated line",
           {"cayley.membership", "cayley.relation", "cayley.cubic",
            "cayley.nonisolated"}},
          {"5. type 2: member, cubic, smooth residual quadric",
           {"type2.membership", "type2.cubic", "type2.split"}},
          {"6. type 3: member, relation, rank-3 quadric with vertex off the "
           "plane",
           {"type3.membership", "type3.relation", "type3.split"}},
          {"7. bounded searches: type 1 never extends, type 4 extends and "
           "the witness verifies",
           {"type1.search", "type4.search"}},
          {"8. involution and rank laws of the squaring maps",
           {"involution.identity", "involution.ranklaws"}},
          {"9. tangent dimension 38 at the example and sampled planes",
           {"determinantal.tangent", "dimension38.sampled"}},
          {"10. semisimple injectivity criterion on the exhaustive grid",
           {"semisimple.injectivity"}},
          {"11. Schur quadric orthogonality",
           {"determinantal.schur", "determinantal.schur.random"}},
          {"12. congruence dictionary: relation (5) and exact flux residuals",
           {"congruence.relation5", "congruence.fluxes"}},
      };

  auto cases = planes::run_verify_cases();
  std::map<std::string, const planes::CaseResult*> by_id;
  for (const auto& c : cases) by_id[c.id] = &c;

  bool all_pass = true;
  for (const auto& [label, ids] : criteria) {
    bool pass = true;
    std::string why;
    for (const auto& id : ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        pass = false;
        why = id + " missing from the case registry";
        break;
      }
      if (!it->second->pass) {
        pass = false;
        why = id + ": " + it->second->detail;
        break;
      }
    }
    std::printf("%s %s\n", pass ? "PASS" : "FAIL", label.c_str());
    if (!pass) std::printf("     %s\n", why.c_str());
    all_pass = all_pass && pass;
  }

  // surface any registry case not covered above, so nothing fails silently
  for (const auto& c : cases)
    if (!c.pass) {
      std::printf("FAIL (registry) %s: %s\n", c.id.c_str(), c.detail.c_str());
      all_pass = false;
    }

  return all_pass ? 0 : 1;
}
