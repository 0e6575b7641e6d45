#include "sf/cli.hpp"

namespace sf {

namespace {

// Coprime pairs in two variables: powers of two independent linear forms, with the second raised.
VerificationReport relatively_prime_suite(int maxdeg) {
  VerificationReport rep{"relatively-prime", {}};
  RingPtr r = PolyRing::make(2);
  DiffOperator a = DiffOperator::linear(r, {1, 0});
  DiffOperator b = DiffOperator::linear(r, {1, 1});
  DiffOperator c = DiffOperator::linear(r, {1, -2});
  const std::pair<DiffOperator, DiffOperator> pairs[] = {{a, b}, {pow(a, 2), b}, {a, pow(c, 2)}, {a * b, pow(c, 2)}};
  int i = 0;
  for (auto& [d1, d2] : pairs) {
    auto sub = check_relatively_prime_lemma(d1, d2, maxdeg);
    for (auto ch : sub.checks) {
      ch.id = "pair" + std::to_string(i) + "-" + ch.id;
      rep.checks.push_back(ch);
    }
    ++i;
  }
  return rep;
}

void prefixed_merge(VerificationReport& into, const VerificationReport& sub) {
  for (auto ch : sub.checks) {
    ch.id = sub.suite + "/" + ch.id;
    into.checks.push_back(std::move(ch));
  }
}

}  // namespace

VerificationReport run_lemma_suite(const RunConfig& c) {
  VerificationReport rep{"lemmas", {}};
  prefixed_merge(rep, relatively_prime_suite(c.hmax));
  prefixed_merge(rep, check_fmd_closed_form(-c.mrange, c.mrange, c.dmax));
  prefixed_merge(rep, check_fabd_closed_form(c.random_instances, c.seed));
  prefixed_merge(rep, check_fmd_kernel_span(c.vmax, c.hmax));
  prefixed_merge(rep, check_degree_lemma(c.random_instances, c.seed));
  prefixed_merge(rep, check_binomial_identity(8, 5, c.seed));
  prefixed_merge(rep, check_flag_relations(std::min(c.vmax, 3), c.hmax));
  prefixed_merge(rep, check_sl2_pieces(c.vmax, c.hmax));
  return rep;
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["verdict"] = verdict_str(r.overall());
  j["checks"] = nlohmann::json::array();
  for (auto& ch : r.checks)
    j["checks"].push_back({{"id", ch.id}, {"anchor", ch.anchor}, {"verdict", verdict_str(ch.verdict)}, {"details", ch.details}});
  return j;
}

}  // namespace sf
