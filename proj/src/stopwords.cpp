#include <algorithm>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "skillsim/parser.hpp"

namespace skillsim {

// Fixed embedded English stopword list (~150 words). Tokens are matched
// after lowercasing.
static const char* kStopwords[] = {
    "a",       "about",   "above",   "after",   "again",   "against", "all",
    "am",      "an",      "and",     "any",     "are",     "as",      "at",
    "be",      "because", "been",    "before",  "being",   "below",   "between",
    "both",    "but",     "by",      "can",     "cannot",  "could",   "did",
    "do",      "does",    "doing",   "down",    "during",  "each",    "else",
    "few",     "for",     "from",    "further", "had",     "has",     "have",
    "having",  "he",      "her",     "here",    "hers",    "herself", "him",
    "himself", "his",     "how",     "i",       "if",      "in",      "into",
    "is",      "it",      "its",     "itself",  "just",    "me",      "more",
    "most",    "my",      "myself",  "no",      "nor",     "not",     "now",
    "of",      "off",     "on",      "once",    "only",    "or",      "other",
    "ought",   "our",     "ours",    "ourselves", "out",   "over",    "own",
    "same",    "she",     "should",  "so",      "some",    "such",    "than",
    "that",    "the",     "their",   "theirs",  "them",    "themselves", "then",
    "there",   "these",   "they",    "this",    "those",   "through", "to",
    "too",     "under",   "until",   "up",      "very",    "was",     "we",
    "were",    "what",    "when",    "where",   "which",   "while",   "who",
    "whom",    "why",     "will",    "with",    "would",   "you",     "your",
    "yours",   "yourself", "yourselves", "also", "although", "among",  "anyone",
    "anything", "around", "away",    "back",    "become",  "becomes", "either",
    "ever",    "every",   "everything", "however", "indeed", "instead", "itself",
    "may",     "might",   "much",    "must",    "neither", "never",   "often",
    "onto",    "per",     "rather",  "since",   "still",   "though",  "thus",
    "upon",    "us",      "via",     "whether", "within",  "without", "yet",
};

static const std::unordered_set<std::string_view>& stopword_set() {
  static const std::unordered_set<std::string_view> set(std::begin(kStopwords),
                                                        std::end(kStopwords));
  return set;
}

bool is_stopword(std::string_view token) {
  return stopword_set().count(token) > 0;
}

const std::vector<std::string>& stopword_list() {
  static const std::vector<std::string> list = [] {
    std::vector<std::string> v(std::begin(kStopwords), std::end(kStopwords));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }();
  return list;
}

}  // namespace skillsim
