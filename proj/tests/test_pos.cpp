#include <catch2/catch_amalgamated.hpp>

#include "kex/pos.hpp"

using kex::PosTag;

namespace {
kex::RuleTagger tagger;
PosTag tag(std::string_view w) { return tagger.tag(w); }
}  // namespace

TEST_CASE("closed-class words", "[pos]") {
  CHECK(tag("the") == PosTag::Other);
  CHECK(tag("of") == PosTag::Other);
  CHECK(tag("we") == PosTag::Other);
  CHECK(tag("and") == PosTag::Other);
  CHECK(tag("this") == PosTag::Other);
  CHECK(tag("can") == PosTag::Other);
  CHECK(tag("is") == PosTag::Other);
  CHECK(tag("not") == PosTag::Other);
}

TEST_CASE("verb lexicon", "[pos]") {
  CHECK(tag("run") == PosTag::Other);
  CHECK(tag("win") == PosTag::Other);
  CHECK(tag("cost") == PosTag::Other);
  CHECK(tag("propose") == PosTag::Other);
  CHECK(tag("show") == PosTag::Other);
  CHECK(tag("use") == PosTag::Other);
  // third-person forms resolve through de-pluralization
  CHECK(tag("runs") == PosTag::Other);
  CHECK(tag("wins") == PosTag::Other);
  CHECK(tag("applies") == PosTag::Other);
  // irregular forms are listed directly
  CHECK(tag("ran") == PosTag::Other);
  CHECK(tag("shown") == PosTag::Other);
}

TEST_CASE("adjective lexicon", "[pos]") {
  CHECK(tag("fast") == PosTag::Adj);
  CHECK(tag("new") == PosTag::Adj);
  CHECK(tag("large") == PosTag::Adj);
  // -ed forms that work as modifiers are rescued by the lexicon
  CHECK(tag("supervised") == PosTag::Adj);
  CHECK(tag("unsupervised") == PosTag::Adj);
  CHECK(tag("weighted") == PosTag::Adj);
  // -ly words that are adjectives, not adverbs
  CHECK(tag("early") == PosTag::Adj);
  CHECK(tag("likely") == PosTag::Adj);
}

TEST_CASE("noun exceptions", "[pos]") {
  CHECK(tag("clustering") == PosTag::Noun);
  CHECK(tag("learning") == PosTag::Noun);
  CHECK(tag("training") == PosTag::Noun);
  CHECK(tag("stemming") == PosTag::Noun);
  CHECK(tag("family") == PosTag::Noun);
}

TEST_CASE("plural handling", "[pos]") {
  CHECK(tag("cars") == PosTag::Noun);
  CHECK(tag("algorithms") == PosTag::Noun);
  CHECK(tag("graphs") == PosTag::Noun);
  CHECK(tag("batches") == PosTag::Noun);
  CHECK(tag("families") == PosTag::Noun);
  // not plurals at all
  CHECK(tag("analysis") == PosTag::Noun);
  CHECK(tag("corpus") == PosTag::Noun);
  CHECK(tag("class") == PosTag::Noun);
}

TEST_CASE("suffix rules", "[pos]") {
  CHECK(tag("quickly") == PosTag::Other);
  CHECK(tag("information") == PosTag::Noun);
  CHECK(tag("measurement") == PosTag::Noun);
  CHECK(tag("robustness") == PosTag::Noun);
  CHECK(tag("sparsity") == PosTag::Noun);
  CHECK(tag("effective") == PosTag::Adj);
  CHECK(tag("automatic") == PosTag::Adj);
  CHECK(tag("statistical") == PosTag::Adj);
  CHECK(tag("scalable") == PosTag::Adj);
  CHECK(tag("famous") == PosTag::Adj);
  CHECK(tag("jumped") == PosTag::Other);
  CHECK(tag("walking") == PosTag::Other);
}

TEST_CASE("default is noun", "[pos]") {
  CHECK(tag("graph") == PosTag::Noun);
  CHECK(tag("keyword") == PosTag::Noun);
  CHECK(tag("abstract") == PosTag::Noun);
  CHECK(tag("x86") == PosTag::Noun);
}

TEST_CASE("tag names round-trip", "[pos]") {
  CHECK(kex::pos_tag_name(PosTag::Noun) == "NOUN");
  CHECK(kex::pos_tag_name(PosTag::Adj) == "ADJ");
  CHECK(kex::pos_tag_name(PosTag::Other) == "OTHER");
  CHECK(kex::parse_pos_tag("NOUN") == PosTag::Noun);
  CHECK(kex::parse_pos_tag("adj") == PosTag::Adj);
  CHECK(kex::parse_pos_tag("other") == PosTag::Other);
  CHECK_THROWS_AS(kex::parse_pos_tag("Other"), kex::DataError);
  CHECK_THROWS_AS(kex::parse_pos_tag("VERB"), kex::DataError);
}
