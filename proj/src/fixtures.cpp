#include "novikov/fixtures.hpp"

#include "novikov/error.hpp"

namespace novikov {

StructureTensor bracket_tensor(std::size_t dim, const std::vector<Entry>& entries) {
  StructureTensor t(dim);
  for (const auto& e : entries) {
    if (e.i == 0 || e.j == 0 || e.k == 0 || e.i > dim || e.j > dim || e.k > dim)
      throw InputError("bracket index out of range");
    t.add(e.i - 1, e.j - 1, e.k - 1, e.value);
    t.add(e.j - 1, e.i - 1, e.k - 1, -e.value);
  }
  return t;
}

StructureTensor product_tensor(std::size_t dim, const std::vector<Entry>& entries) {
  StructureTensor t(dim);
  for (const auto& e : entries) {
    if (e.i == 0 || e.j == 0 || e.k == 0 || e.i > dim || e.j > dim || e.k > dim)
      throw InputError("product index out of range");
    t.add(e.i - 1, e.j - 1, e.k - 1, e.value);
  }
  return t;
}

namespace fixtures {

namespace {
const Scalar one(1);
const Scalar half = make_scalar(1, 2);
}  // namespace

LieAlgebra abelian(std::size_t n) { return validate_lie(StructureTensor(n)); }

LieAlgebra r2() { return validate_lie(bracket_tensor(2, {{1, 2, 2, one}}), default_labels(2, "x")); }

LieAlgebra n3() { return validate_lie(bracket_tensor(3, {{1, 2, 3, one}})); }

LieAlgebra r3() { return validate_lie(bracket_tensor(3, {{1, 2, 2, one}, {1, 3, 2, one}, {1, 3, 3, one}})); }

LieAlgebra r3_lambda(const Scalar& lambda) {
  return validate_lie(bracket_tensor(3, {{1, 2, 2, one}, {1, 3, 3, lambda}}));
}

LieAlgebra sl2() {
  return validate_lie(bracket_tensor(3, {{1, 2, 3, one}, {1, 3, 1, Scalar(-2)}, {2, 3, 2, Scalar(2)}}));
}

LieAlgebra ex35() {
  // A=1, B=2, C=3, X=4, Y=5
  return validate_lie(bracket_tensor(5, {{4, 5, 1, one}, {4, 1, 2, one}, {5, 1, 3, one}}), {"A", "B", "C", "X", "Y"});
}

LieAlgebra free_n2_c4() {
  return validate_lie(bracket_tensor(8, {{1, 2, 3, one},
                                         {1, 3, 4, one},
                                         {2, 3, 5, one},
                                         {1, 4, 6, one},
                                         {2, 4, 7, one},
                                         {1, 5, 7, one},
                                         {2, 5, 8, one}}),
                      default_labels(8, "x"));
}

LieAlgebra free_n3_c3() {
  return validate_lie(bracket_tensor(14, {{1, 2, 4, one},
                                          {1, 3, 5, one},
                                          {2, 3, 6, one},
                                          {1, 4, 7, one},
                                          {2, 4, 8, one},
                                          {3, 4, 9, one},
                                          {1, 5, 10, one},
                                          {2, 5, 11, one},
                                          {3, 5, 12, one},
                                          {1, 6, 11, one},
                                          {1, 6, 9, -one},
                                          {2, 6, 13, one},
                                          {3, 6, 14, one}}),
                      default_labels(14, "x"));
}

LieAlgebra filiform(std::size_t n) {
  if (n < 2) throw UnknownFixture("filiform needs dimension at least 2");
  std::vector<Entry> e;
  for (std::size_t i = 2; i < n; ++i) e.push_back({1, i, i + 1, one});
  return validate_lie(bracket_tensor(n, e));
}

LieAlgebra in_lie(std::size_t n) {
  if (n < 2) throw UnknownFixture("In needs dimension at least 2");
  std::vector<Entry> e;
  for (std::size_t j = 2; j <= n; ++j) e.push_back({1, j, j, one});
  return validate_lie(bracket_tensor(n, e));
}

AlgebraProduct ex35_product() {
  return AlgebraProduct(product_tensor(5, {{1, 4, 2, -half}, {4, 1, 2, half}, {5, 1, 3, one}, {5, 4, 1, -one}}));
}

AlgebraProduct free_n3_c3_product() {
  return AlgebraProduct(product_tensor(14, {{1, 3, 5, one},
                                            {1, 4, 7, half},
                                            {1, 5, 10, one},
                                            {1, 6, 11, one},
                                            {1, 6, 9, -half},
                                            {2, 1, 4, -one},
                                            {2, 3, 6, one},
                                            {2, 4, 8, one},
                                            {2, 5, 11, one},
                                            {2, 6, 13, one},
                                            {3, 4, 9, half},
                                            {3, 5, 12, half},
                                            {3, 6, 14, half},
                                            {4, 1, 7, -half},
                                            {4, 3, 9, -half},
                                            {5, 3, 12, -half},
                                            {6, 1, 9, half},
                                            {6, 3, 14, -half}}));
}

AlgebraProduct in_lsa(std::size_t n) {
  if (n < 2) throw UnknownFixture("In needs dimension at least 2");
  std::vector<Entry> e{{1, 1, 1, Scalar(2)}};
  for (std::size_t j = 2; j <= n; ++j) {
    e.push_back({1, j, j, one});
    e.push_back({j, j, 1, one});
  }
  return AlgebraProduct(product_tensor(n, e));
}

AlgebraProduct in_novikov(std::size_t n) {
  if (n < 2) throw UnknownFixture("In needs dimension at least 2");
  std::vector<Entry> e;
  for (std::size_t j = 2; j <= n; ++j) e.push_back({1, j, j, one});
  return AlgebraProduct(product_tensor(n, e));
}

}  // namespace fixtures

namespace {

std::pair<std::string, std::string> split_name(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) return {name, ""};
  return {name.substr(0, colon), name.substr(colon + 1)};
}

std::size_t size_param(const std::string& name, const std::string& param) {
  if (param.empty() || param.size() > 3 || param.find_first_not_of("0123456789") != std::string::npos)
    throw UnknownFixture("fixture '" + name + "' needs a dimension parameter, e.g. '" + name + ":4'");
  return std::stoul(param);
}

}  // namespace

LieAlgebra fixture(const std::string& name) {
  const auto [base, param] = split_name(name);
  auto no_param = [&] {
    if (!param.empty()) throw UnknownFixture("fixture '" + base + "' takes no parameter");
  };
  if (base == "abelian") return fixtures::abelian(size_param(base, param));
  if (base == "filiform") return fixtures::filiform(size_param(base, param));
  if (base == "In") return fixtures::in_lie(size_param(base, param));
  if (base == "r3-lambda") {
    if (param.empty()) throw UnknownFixture("fixture 'r3-lambda' needs a rational parameter, e.g. 'r3-lambda:-1'");
    try {
      return fixtures::r3_lambda(parse_scalar(param));
    } catch (const InputError& e) {
      throw UnknownFixture(std::string("bad lambda: ") + e.what());
    }
  }
  no_param();
  if (base == "r2") return fixtures::r2();
  if (base == "n3") return fixtures::n3();
  if (base == "r3") return fixtures::r3();
  if (base == "sl2") return fixtures::sl2();
  if (base == "ex35") return fixtures::ex35();
  if (base == "free-n2-c4") return fixtures::free_n2_c4();
  if (base == "free-n3-c3") return fixtures::free_n3_c3();
  throw UnknownFixture("unknown fixture '" + name + "'");
}

AlgebraProduct product_fixture(const std::string& name) {
  const auto [base, param] = split_name(name);
  if (base == "ex35" && param.empty()) return fixtures::ex35_product();
  if (base == "free-n3-c3" && param.empty()) return fixtures::free_n3_c3_product();
  if (base == "In") return fixtures::in_lsa(size_param(base, param));
  if (base == "In-novikov") return fixtures::in_novikov(size_param(base, param));
  if (base == "half-bracket") return half_bracket(fixture(param));
  throw UnknownFixture("unknown product fixture '" + name + "'");
}

LieAlgebra product_fixture_lie(const std::string& name) {
  const auto [base, param] = split_name(name);
  if (base == "In-novikov") return fixtures::in_lie(size_param(base, param));
  if (base == "half-bracket") return fixture(param);
  if (base == "ex35" || base == "free-n3-c3" || base == "In") return fixture(name);
  throw UnknownFixture("unknown product fixture '" + name + "'");
}

std::vector<std::string> fixture_corpus() {
  std::vector<std::string> names{"abelian:3", "r2", "n3", "r3", "r3-lambda:-1", "r3-lambda:0", "r3-lambda:1/2",
                                 "r3-lambda:2", "r3-lambda:-3/4", "sl2", "ex35", "free-n2-c4", "free-n3-c3"};
  for (int n = 2; n <= 8; ++n) names.push_back("filiform:" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) names.push_back("In:" + std::to_string(n));
  return names;
}

std::vector<std::string> product_fixture_corpus() {
  std::vector<std::string> names{"ex35", "free-n3-c3", "half-bracket:n3", "half-bracket:abelian:3",
                                 "half-bracket:free-n2-c4"};
  for (int n = 2; n <= 4; ++n) {
    names.push_back("In:" + std::to_string(n));
    names.push_back("In-novikov:" + std::to_string(n));
  }
  return names;
}

}  // namespace novikov
