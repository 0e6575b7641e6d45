#include <CLI11.hpp>
#include <iostream>

#include "sf/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Equivariant homology of affine Springer fibers: presentations, endoscopy and orbital traces"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string config, out = "springer_out";
  app.add_option("--config", config, "YAML run configuration");
  app.add_option("--out", out, "output directory");

  std::vector<long> q;
  int v = -1;
  std::string kappa, tau, space;
  const char* names[] = {"lemmas", "present", "graph", "endoscopy", "orbital"};
  const char* help[] = {"run the lemma suite", "graded presentation pieces", "moment graph JSON",
                        "localized isomorphism and E2 shift", "Lefschetz trace against twisted point counts"};
  for (int i = 0; i < 5; ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--v", v, "constant valuation, overrides the config");
    sub->add_option("--space", space, "grassmannian or flag");
    if (std::string(names[i]) == "orbital") {
      sub->add_option("--q", q, "residue field sizes")->delimiter(',');
      sub->add_option("--kappa", kappa, "character: trivial, -1 or order:e1,...");
      sub->add_option("--tau", tau, "id, w or a Weyl index");
    }
  }
  CLI11_PARSE(app, argc, argv);

  try {
    sf::RunConfig c = config.empty() ? sf::RunConfig{} : sf::load_config(config);
    if (v >= 0) c.valuations = {v};
    if (!q.empty()) c.q = q;
    if (!kappa.empty()) c.kappa = kappa;
    if (!tau.empty()) c.tau = tau;
    if (!space.empty()) c.space = sf::parse_space(space);
    std::string name = app.get_subcommands().front()->get_name();
    sf::DispatchResult r = sf::dispatch(name, c, out);
    std::cout << r.text;
    for (auto& f : r.files) std::cout << "wrote " << f << "\n";
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
