#ifndef LIMATTN_FIXTURES_HPP
#define LIMATTN_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "limattn/axioms.hpp"
#include "limattn/core.hpp"

namespace limattn {

// Published example choice functions c1..c7 with the memberships they are
// meant to show.
struct ChoiceFixture {
  std::string name;
  std::string source;  // choice-file text
  bool cola, csla, ccla;
  std::optional<bool> pilc;

  ChoiceFunction choice() const;
};

// Published example correspondences.
struct CorrFixture {
  std::string name;
  std::string source;  // correspondence-file text

  ChoiceCorrespondence gamma() const;
};

const std::vector<ChoiceFixture>& choice_fixtures();
const std::vector<CorrFixture>& corr_fixtures();
const ChoiceFixture& choice_fixture(std::string_view name);
const CorrFixture& corr_fixture(std::string_view name);

struct FixtureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Every published claim about the fixtures, evaluated.
std::vector<FixtureCheck> verify_fixtures();

}  // namespace limattn

#endif  // LIMATTN_FIXTURES_HPP
