#include <doctest.h>

#include <fstream>
#include <sstream>

#include "citenet/citation_matrix.hpp"
#include "citenet/fixtures.hpp"
#include "oracles.hpp"

using namespace citenet;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream file(std::string(CITENET_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(file);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

CitationMatrix matrix_of(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd z(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) z(i, j++) = v;
    ++i;
  }
  return CitationMatrix(JournalSet::generated(static_cast<std::size_t>(n)), z);
}

}  // namespace

TEST_CASE("JournalSet rejects empty and duplicate labels") {
  CHECK_THROWS_AS(JournalSet({"A", ""}), DataError);
  CHECK_THROWS_AS(JournalSet({"A", "B", "A"}), DataError);
  const JournalSet set({"A", "B", "C"});
  CHECK(set.index_of("C") == 2u);
  CHECK_FALSE(set.index_of("D").has_value());
  CHECK(JournalSet::generated(3).labels() == std::vector<std::string>{"J1", "J2", "J3"});
}

TEST_CASE("CitationMatrix validates shape and entries") {
  CHECK_THROWS_AS(CitationMatrix(JournalSet::generated(1), Eigen::MatrixXd::Ones(1, 1)), DataError);
  CHECK_THROWS_AS(CitationMatrix(JournalSet::generated(2), Eigen::MatrixXd::Ones(2, 3)), DataError);
  CHECK_THROWS_AS(CitationMatrix(JournalSet::generated(3), Eigen::MatrixXd::Ones(2, 2)), DataError);
  Eigen::MatrixXd negative = Eigen::MatrixXd::Ones(2, 2);
  negative(0, 1) = -1;
  CHECK_THROWS_AS(CitationMatrix(JournalSet::generated(2), negative), DataError);
  Eigen::MatrixXd infinite = Eigen::MatrixXd::Ones(2, 2);
  infinite(1, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(CitationMatrix(JournalSet::generated(2), infinite), DataError);
}

TEST_CASE("parse_matrix_csv headerless") {
  const CitationMatrix m = parse_matrix_csv("1,2\n3,4");
  CHECK(m.size() == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == 3);
  CHECK(m(1, 1) == 4);
  CHECK(m.journals().labels() == std::vector<std::string>{"J1", "J2"});
  CHECK(m.orientation() == Orientation::cited_rows);

  SUBCASE("CRLF and trailing blank lines") {
    CHECK(parse_matrix_csv("1,2\r\n3,4\r\n\r\n") == m);
    CHECK(parse_matrix_csv(" 1 , 2\n3,\t4\n") == m);
  }
  SUBCASE("ragged row") {
    try {
      parse_matrix_csv("1,2\n3");
      FAIL("expected an error");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("ragged") != std::string::npos);
      CHECK(e.subject() == "line 2");
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_matrix_csv("1,2,3\n4,5,6"), DataError);  // not square
    CHECK_THROWS_AS(parse_matrix_csv("1,-2\n3,4"), DataError);
    CHECK_THROWS_AS(parse_matrix_csv("1,x\n3,4"), DataError);
    CHECK_THROWS_AS(parse_matrix_csv("1,\n3,4"), DataError);
    CHECK_THROWS_AS(parse_matrix_csv("1,nan\n3,4"), DataError);
    CHECK_THROWS_AS(parse_matrix_csv("5"), DataError);
    CHECK_THROWS_AS(parse_matrix_csv(""), DataError);
    CHECK_THROWS_AS(parse_matrix_csv("1,2\n\n3,4"), DataError);
  }
}

TEST_CASE("parse_matrix_csv enforces the journal cap") {
  const auto square = [](std::size_t n) {
    std::string row;
    for (std::size_t j = 0; j < n; ++j) row += (j ? ",1" : "1");
    std::string text;
    for (std::size_t i = 0; i < n; ++i) text += row + "\n";
    return text;
  };
  CHECK(parse_matrix_csv(square(1024)).size() == 1024);
  CHECK_THROWS_AS(parse_matrix_csv(square(1025)), DataError);
  CHECK(parse_matrix_csv(square(1025), {LabelsMode::headerless, 2048}).size() == 1025);
  CHECK_THROWS_AS(parse_matrix_csv(square(3), {LabelsMode::headerless, 2}), DataError);
}

TEST_CASE("parse_matrix_csv labeled") {
  const CitationMatrix m =
      parse_matrix_csv(",A,\"B, Inc\"\nA,1,2\n\"B, Inc\",3,4\n", {LabelsMode::labeled});
  CHECK(m.journals().labels() == std::vector<std::string>{"A", "B, Inc"});
  CHECK(m(1, 0) == 3);
  CHECK_THROWS_AS(parse_matrix_csv(",A,B\nB,1,2\nA,3,4\n", {LabelsMode::labeled}), DataError);
  CHECK_THROWS_AS(parse_matrix_csv(",A,A\nA,1,2\nA,3,4\n", {LabelsMode::labeled}), DataError);
  CHECK_THROWS_AS(parse_matrix_csv(",A,B\nA,1,2\n", {LabelsMode::labeled}), DataError);
  CHECK_THROWS_AS(parse_matrix_csv(",A,B\nA,1,2\nB,3\n", {LabelsMode::labeled}), DataError);
}

TEST_CASE("Price fixture file parses to the published table") {
  const CitationMatrix from_text = parse_matrix_csv(read_file("price_biochemistry_text.csv"));
  const CitationMatrix labeled =
      parse_matrix_csv(read_file("price_biochemistry_labeled.csv"), {LabelsMode::labeled});
  const CitationMatrix embedded = fixtures::price_biochemistry();
  CHECK(labeled == embedded);
  CHECK(from_text.counts() == embedded.counts());
  CHECK(from_text(0, 0) == 9384);

  const MarginTotals totals = margins(labeled);
  CHECK(totals.cited(0) == 27596);
  CHECK(totals.citing(0) == 22036);
  CHECK(totals.grand_total == 103720);
}

TEST_CASE("serialize_matrix_csv") {
  CHECK(serialize_matrix_csv(matrix_of({{0, 0}, {0, 0}})) == "0,0\n0,0\n");
  const CitationMatrix price = fixtures::price_biochemistry();
  const CitationMatrix headerless = parse_matrix_csv(serialize_matrix_csv(price));
  CHECK(headerless.counts() == price.counts());
  CHECK(parse_matrix_csv(serialize_matrix_csv(price, LabelsMode::labeled), {LabelsMode::labeled}) ==
        price);
  const CitationMatrix two = matrix_of({{1.5, 0.25}, {1e-300, 3}});
  const std::string text = serialize_matrix_csv(two, LabelsMode::labeled);
  CHECK(text.substr(0, text.find('\n')) == ",J1,J2");
  CHECK(parse_matrix_csv(text, {LabelsMode::labeled}) == two);
}

TEST_CASE("margins") {
  const MarginTotals price = margins(fixtures::price_biochemistry());
  Eigen::VectorXd cited(8), citing(8);
  cited << 27596, 15949, 15421, 12468, 9056, 7296, 8475, 7459;
  citing << 22036, 24403, 11703, 15136, 6674, 8577, 6506, 8685;
  CHECK(price.cited == cited);
  CHECK(price.citing == citing);
  CHECK(price.grand_total == 103720);

  const MarginTotals identity = margins(
      CitationMatrix(JournalSet::generated(3), Eigen::MatrixXd::Identity(3, 3)));
  CHECK(identity.cited == Eigen::VectorXd::Ones(3));
  CHECK(identity.citing == Eigen::VectorXd::Ones(3));

  const MarginTotals zero = margins(matrix_of({{0, 0}, {0, 0}}));
  CHECK(zero.cited.isZero(0));
  CHECK(zero.citing.isZero(0));
  CHECK(zero.grand_total == 0);
}

TEST_CASE("transpose") {
  const CitationMatrix price = fixtures::price_biochemistry();
  const CitationMatrix t = transpose(price);
  CHECK(price(1, 0) == 2406);
  CHECK(price(0, 1) == 6181);
  CHECK(t(0, 1) == 2406);
  CHECK(t(1, 0) == 6181);
  CHECK(t.orientation() == Orientation::citing_rows);
  CHECK(t.journals() == price.journals());
  CHECK(transpose(t) == price);

  const CitationMatrix symmetric = matrix_of({{1, 2}, {2, 5}});
  CHECK(transpose(symmetric).counts() == symmetric.counts());
}

TEST_CASE("strip_self_citations") {
  const CitationMatrix price = fixtures::price_biochemistry();
  const CitationMatrix stripped = strip_self_citations(price);
  CHECK(stripped.counts().diagonal().isZero(0));
  Eigen::MatrixXd off = price.counts();
  off.diagonal().setZero();
  CHECK(stripped.counts() == off);
  const MarginTotals totals = margins(stripped);
  CHECK(totals.cited(0) == 27596 - 9384);
  CHECK(totals.cited(0) == 18212);
  CHECK(totals.citing(0) == 22036 - 9384);
  CHECK(strip_self_citations(stripped) == stripped);
  CHECK(strip_self_citations(matrix_of({{0, 1}, {2, 0}})) == matrix_of({{0, 1}, {2, 0}}));
}

TEST_CASE("matrix_power") {
  const CitationMatrix price = fixtures::price_biochemistry();
  CHECK(matrix_power(price, 1) == price.counts());
  CHECK(matrix_power(matrix_of({{1, 1}, {0, 1}}), 3) == (Eigen::MatrixXd(2, 2) << 1, 3, 0, 1).finished());
  CHECK_THROWS_AS(matrix_power(price, 0), UsageError);

  SUBCASE("k = 2 against a triple-loop product") {
    std::vector<std::vector<double>> z;
    for (const auto& row : oracle::price_counts()) z.emplace_back(row.begin(), row.end());
    const auto expected = oracle::multiply(z, z);
    const Eigen::MatrixXd squared = matrix_power(price, 2);
    // Integer products stay below 2^53, so both routes are exact.
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(squared(i, j) == expected[i][j]);
    CHECK(squared(0, 0) == 126591885.0);  // numpy: (Z @ Z)[0, 0]
  }
  SUBCASE("overflow names the cell") {
    const CitationMatrix huge = matrix_of({{1e200, 1}, {1, 1}});
    try {
      matrix_power(huge, 2);
      FAIL("expected overflow");
    } catch (const NumericalError& e) {
      CHECK(e.subject() == "(1,1) J1 <- J1");
    }
  }
}
