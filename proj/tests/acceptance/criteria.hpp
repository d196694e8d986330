// The acceptance criteria, one function each, shared by the acceptance test
// binary and the `suite` subcommand of the command-line tool.

#ifndef INVMON_TESTS_CRITERIA_HPP_
#define INVMON_TESTS_CRITERIA_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace invmon::acceptance {

  struct Outcome {
    int         id;
    std::string title;
    bool        passed = false;
    std::string detail;
    double      seconds       = 0;
    double      limit_seconds = 0;
  };

  struct SuiteOptions {
    //! Where criterion 10 writes its artifacts; nothing is written if empty.
    std::string output_dir;
  };

  Outcome munn_vagner_agreement();
  Outcome bicyclic_suite();
  Outcome raag_agreement();
  Outcome embedding_verification();
  Outcome one_relator_relator_check();
  Outcome free_product_lemmas();
  Outcome construction_end_to_end();
  Outcome presentation_equivalence();
  Outcome prefix_generator_check();
  Outcome determinism(SuiteOptions const& options);

  //! File name → contents of every JSON and DOT artifact of the suite.
  std::map<std::string, std::string> generate_artifacts();

  //! Runs the selected criteria (all if `only` is empty) in order.
  std::vector<Outcome> run_suite(SuiteOptions const&        options,
                                 std::vector<int> const&    only = {},
                                 std::function<void(Outcome const&)> const& each
                                 = {});

  //! "PASS [n] title (1.23 s): detail"
  std::string format_outcome(Outcome const& o);

}  // namespace invmon::acceptance

#endif  // INVMON_TESTS_CRITERIA_HPP_
