#include <doctest.h>

#include "argrev/textproc.hpp"

using namespace argrev;

TEST_CASE("StopwordSet parses one word per line with comments") {
  auto set = StopwordSet::parse(
      "# function words\n"
      "the\n"
      "  and  # trailing comment\n"
      "\n"
      "of");
  CHECK(set.size() == 3);
  CHECK(set.contains("the"));
  CHECK(set.contains("and"));
  CHECK(set.contains("of"));
  CHECK(!set.contains("book"));
  CHECK(!set.contains(""));
}

TEST_CASE("default English stopwords cover common function words") {
  const auto& set = StopwordSet::default_english();
  CHECK(set.size() > 100);
  for (const char* word : {"the", "a", "and", "is", "of", "to", "it"})
    CHECK(set.contains(word));
  CHECK(!set.contains("plot"));
  CHECK(!set.contains("excellent"));
}

TEST_CASE("segment_sentences splits on terminal punctuation") {
  auto sentences = segment_sentences("First one. Second!  Third? Tail");
  REQUIRE(sentences.size() == 4);
  CHECK(sentences[0] == "First one.");
  CHECK(sentences[1] == "Second!");
  CHECK(sentences[2] == "Third?");
  CHECK(sentences[3] == "Tail");  // unterminated tail still counts
}

TEST_CASE("segment_sentences needs whitespace or end after the terminator") {
  auto sentences = segment_sentences("Version 2.5 is out. Nice.");
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0] == "Version 2.5 is out.");
  CHECK(sentences[1] == "Nice.");

  CHECK(segment_sentences("").empty());
  CHECK(segment_sentences("   ").empty());
  CHECK(segment_sentences("...") == std::vector<std::string>{"..."});
}

TEST_CASE("segment_clauses splits at commas, semicolons, colons and dashes") {
  auto clauses = segment_clauses("one, two; three: four -- five");
  REQUIRE(clauses.size() == 5);
  CHECK(clauses[0] == "one");
  CHECK(clauses[1] == "two");
  CHECK(clauses[2] == "three");
  CHECK(clauses[3] == "four");
  CHECK(clauses[4] == "five");

  // A single hyphen binds words; it is not a clause boundary.
  auto hyphen = segment_clauses("well-known fact, yes");
  REQUIRE(hyphen.size() == 2);
  CHECK(hyphen[0] == "well-known fact");

  // Empty pieces vanish.
  CHECK(segment_clauses(",,a,,").size() == 1);
  CHECK(segment_clauses("").empty());
}

TEST_CASE("tokenize lowercases and splits on non-alphanumerics") {
  auto tokens = tokenize("It's GREAT-stuff, 10/10!");
  REQUIRE(tokens.size() == 6);
  CHECK(tokens[0].surface == "it");
  CHECK(tokens[1].surface == "s");
  CHECK(tokens[2].surface == "great");
  CHECK(tokens[3].surface == "stuff");
  CHECK(tokens[4].surface == "10");
  CHECK(tokens[5].surface == "10");
}

TEST_CASE("tokenize flags stopwords") {
  StopwordSet stop({"the", "a"});
  auto tokens = tokenize("The plot of a book", stop);
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].is_stopword);   // the
  CHECK(!tokens[1].is_stopword);  // plot
  CHECK(!tokens[2].is_stopword);  // of -- not in this tiny list
  CHECK(tokens[3].is_stopword);   // a
  CHECK(!tokens[4].is_stopword);  // book
}

TEST_CASE("token_count matches tokenize") {
  for (const char* text :
       {"", " ", "one", "It's GREAT-stuff, 10/10!", "a b  c", "..!?"}) {
    CHECK(token_count(text) == tokenize(text).size());
  }
}

TEST_CASE("letter_count counts alphabetic characters only") {
  CHECK(letter_count("") == 0);
  CHECK(letter_count("abc") == 3);
  CHECK(letter_count("a1b2!") == 2);
  CHECK(letter_count("10/10") == 0);
  CHECK(letter_count("Great book.") == 9);
}

TEST_CASE("segment_text combines sentence, clause and token views") {
  StopwordSet stop({"is"});
  auto segmented = segment_text("Good story, weak end. Still: worth it!", stop);
  REQUIRE(segmented.sentences.size() == 2);
  REQUIRE(segmented.clauses.size() == 4);
  CHECK(segmented.clauses[0] == "Good story");
  CHECK(segmented.clauses[1] == "weak end.");
  CHECK(segmented.clauses[2] == "Still");
  CHECK(segmented.clauses[3] == "worth it!");
  CHECK(segmented.tokens.size() == 7);
}
