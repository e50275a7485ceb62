#include <doctest.h>

#include "fixtures.hpp"

TEST_CASE("single coefficient corruptions are caught with a witness") {
  std::mt19937_64 rng(29);
  for (const auto& name : fx::acceptance_models()) {
    const std::string text = aqg::model_spec(name);
    for (int k = 0; k < 20; ++k) {
      const auto bad = fx::corrupt_spec(text, rng);
      CAPTURE(name);
      CAPTURE(bad.description);
      const auto report = aqg::run_full_suite(aqg::parse_spec_unchecked(bad.text));
      const auto* failure = fx::first_failure(report);
      REQUIRE(failure != nullptr);
      CHECK_FALSE(failure->witness.empty());
    }
  }
}

TEST_CASE("corrupted corepresentation is caught") {
  const auto& m = fx::model("sweedler");
  auto c = fx::sweedler_corep(m);
  c.v.left(5, 0) += aqg::Scalar(1);
  aqg::Report r;
  aqg::run_corep_checks(m.g, m.d, c, r);
  const auto* failure = fx::first_failure(r);
  REQUIRE(failure != nullptr);
  CHECK_FALSE(failure->witness.empty());
}
