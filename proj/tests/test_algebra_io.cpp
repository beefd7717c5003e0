#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mvmlab/algebra_io.hpp"
#include "mvmlab/term.hpp"
#include "support.hpp"

using namespace mvmlab;
using testing_support::corpus_dir;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSmall =
    "algebra two size 2\n"
    "op oplus arity 2\n"
    "0 1\n"
    "1 1\n"
    "const zero 0\n";

}  // namespace

TEST(AlgebraIo, CorpusRoundTripsBitExactly) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir())) {
    if (entry.path().extension() != ".alg") continue;
    ++seen;
    std::string text = slurp(entry.path());
    EXPECT_EQ(serialize_algebra(parse_algebra(text)), text) << entry.path();
  }
  EXPECT_GE(seen, 10u);
}

TEST(AlgebraIo, LukasiewiczThreeHasSixNames) {
  auto a = load_algebra(corpus_dir() / "lukasiewicz_3.alg");
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.operations().size() + a.constants().size(), 6u);
}

TEST(AlgebraIo, ParsesMinimalFile) {
  auto a = parse_algebra(kSmall);
  EXPECT_EQ(a.name(), "two");
  EXPECT_EQ(a.constant("zero"), 0u);
  EXPECT_EQ(serialize_algebra(a), kSmall);
}

TEST(AlgebraIo, OutOfRangeEntryNamesPosition) {
  std::string bad = kSmall;
  bad.replace(bad.find("1 1\n"), 3, "1 2");
  try {
    (void)parse_algebra(bad);
    FAIL() << "accepted out-of-range entry";
  } catch (const ParseError& e) {
    std::string what = e.what();
    EXPECT_NE(what.find("line 4"), std::string::npos) << what;
    EXPECT_NE(what.find("column 3"), std::string::npos) << what;
  }
}

TEST(AlgebraIo, MalformedInputs) {
  EXPECT_THROW(parse_algebra("algebra x size 0\n"), ParseError);
  EXPECT_THROW(parse_algebra("algebr x size 2\n"), ParseError);
  EXPECT_THROW(parse_algebra("algebra x size 2\nop f arity 2\n0 1\n1\n"),
               ParseError);
  EXPECT_THROW(parse_algebra("algebra x size 2\nconst c 5\n"), ParseError);
  EXPECT_THROW(parse_algebra("algebra x size 2\nconst c 0\nconst c 1\n"),
               ParseError);
}

TEST(AlgebraIo, MissingFileIsAnError) {
  EXPECT_THROW(load_algebra(corpus_dir() / "does_not_exist.alg"), ParseError);
}

TEST(AlgebraIo, NotesSurviveSaveAndLoad) {
  auto a = parse_algebra(std::string("# hello\n") + kSmall);
  ASSERT_EQ(a.notes().size(), 1u);
  auto path = std::filesystem::temp_directory_path() / "mvmlab_io_test.alg";
  save_algebra(a, path);
  auto b = load_algebra(path);
  std::filesystem::remove(path);
  EXPECT_EQ(b.notes(), a.notes());
  EXPECT_TRUE(b.same_structure(a));
}
