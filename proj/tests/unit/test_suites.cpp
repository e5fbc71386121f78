#include "doctest.h"
#include "qsemi/errors.hpp"
#include "qsemi/suites.hpp"

using namespace qsemi;

namespace {

std::vector<std::string> failing(const Report& rep) {
  std::vector<std::string> out;
  for (const Check& c : rep.checks())
    if (!c.passed) out.push_back(c.name);
  return out;
}

}  // namespace

TEST_CASE("counterexample suite") {
  for (const QContext& ctx : {QContext::askey_wilson_symbolic(), QContext::askey_wilson_rational(mpq_class(3, 5))}) {
    const Report rep = run_counterexample_suite(10, ctx);
    CHECK(rep.pass());
    CHECK(rep.find("class-two") != nullptr);
    CHECK(rep.find("Phi-closed-form")->passed);
    CHECK(rep.find("structure-relation")->n_range == std::optional<std::pair<int, int>>({1, 10}));
  }
  CHECK_THROWS_AS(run_counterexample_suite(3, QContext::askey_wilson_symbolic()), PreconditionError);
  CHECK_THROWS_AS(run_counterexample_suite(10, QContext::hahn_symbolic(Scalar(0))), PreconditionError);
}

TEST_CASE("second-order relation suite") {
  const Report rep = run_second_order_suite(12, QContext::askey_wilson_symbolic());
  CHECK_FALSE(rep.pass());
  CHECK(failing(rep) == std::vector<std::string>{"d_n,4-alpha-product-form"});
  CHECK(rep.find("d_n,4-alpha-product-form")->first_failure == 6);
  CHECK(rep.find("d_n,4-q-product-form")->passed);
  CHECK(rep.find("support")->passed);

  const Report rat = run_second_order_suite(12, QContext::askey_wilson_rational(mpq_class(1, 2)));
  CHECK(failing(rat) == std::vector<std::string>{"d_n,4-alpha-product-form"});
}

TEST_CASE("classical reference suite") {
  const Report rep = run_classical_reference_suite(10, QContext::askey_wilson_symbolic());
  CHECK(rep.pass());
  CHECK(rep.find("regularity-criterion")->n_range == std::optional<std::pair<int, int>>({0, 50}));
  CHECK(rep.config()["N"] == 10);
}

TEST_CASE("Hahn suite") {
  const Report rep = run_hahn_class_one_suite(8, QContext::hahn_rational(mpq_class(2, 3), mpq_class(-1)));
  CHECK(rep.pass());
  CHECK(rep.find("class-one/class-one")->passed);
  CHECK(rep.find("asc-classical")->passed);
  CHECK_THROWS_AS(run_hahn_class_one_suite(8, QContext::askey_wilson_symbolic()), PreconditionError);
  // b = 0 leaves the class-one example undefined.
  CHECK_THROWS_AS(run_hahn_class_one_suite(8, QContext::hahn_symbolic(Scalar(1)), HahnSuiteParams{1, 0, 2, 5}),
                  PreconditionError);
}
