#pragma once

#include <set>
#include <string>
#include <string_view>

#include "kex/errors.hpp"

namespace kex {

enum class PosTag { Noun, Adj, Other };

inline std::string_view pos_tag_name(PosTag t) {
  switch (t) {
    case PosTag::Noun: return "NOUN";
    case PosTag::Adj: return "ADJ";
    default: return "OTHER";
  }
}

inline PosTag parse_pos_tag(std::string_view s) {
  if (s == "NOUN" || s == "noun") return PosTag::Noun;
  if (s == "ADJ" || s == "adj") return PosTag::Adj;
  if (s == "OTHER" || s == "other") return PosTag::Other;
  throw DataError("unknown part-of-speech tag: " + std::string(s));
}

// Tag source for candidate selection. Implementations receive lowercase,
// hyphen-stripped tokens.
struct Tagger {
  virtual ~Tagger() = default;
  virtual PosTag tag(std::string_view lower_word) const = 0;
};

namespace detail {

using WordSet = std::set<std::string_view>;

inline const WordSet& closed_class_words() {
  static const WordSet words = {
      // pronouns
      "i", "me", "my", "mine", "myself", "we", "us", "our", "ours",
      "ourselves", "you", "your", "yours", "yourself", "yourselves", "he",
      "him", "his", "himself", "she", "her", "hers", "herself", "it", "its",
      "itself", "they", "them", "their", "theirs", "themselves", "one",
      "oneself", "who", "whom", "whose", "which", "what", "something",
      "nothing", "anything", "everything", "someone", "anyone", "everyone",
      "somebody", "anybody", "everybody", "nobody", "none",
      // determiners and quantifiers
      "a", "an", "the", "this", "that", "these", "those", "some", "any",
      "no", "every", "each", "both", "all", "many", "much", "few", "little",
      "several", "most", "more", "less", "least", "enough", "such", "own",
      "other", "another", "same", "certain", "various", "numerous",
      // number words
      "one", "two", "three", "four", "five", "six", "seven", "eight",
      "nine", "ten", "eleven", "twelve", "twenty", "thirty", "forty",
      "fifty", "hundred", "thousand", "million", "billion", "first",
      "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth",
      "ninth", "tenth",
      // prepositions
      "of", "in", "on", "at", "by", "for", "with", "without", "within",
      "from", "to", "into", "onto", "upon", "about", "above", "below",
      "over", "under", "between", "among", "amongst", "through", "during",
      "before", "after", "behind", "beyond", "along", "across", "around",
      "near", "toward", "towards", "off", "out", "up", "down", "via",
      "per", "amid", "despite", "except", "unless", "until", "since",
      "regarding", "concerning", "according", "like", "unlike", "worth",
      // conjunctions
      "and", "or", "but", "nor", "so", "yet", "if", "because", "although",
      "though", "while", "whereas", "when", "whenever", "where",
      "wherever", "as", "than", "whether", "once", "neither", "either",
      // auxiliaries and modals
      "am", "is", "are", "was", "were", "be", "been", "being", "have",
      "has", "had", "having", "do", "does", "did", "doing", "will",
      "would", "shall", "should", "can", "could", "may", "might", "must",
      "ought",
      // adverbs and particles without a reliable suffix
      "not", "never", "always", "often", "sometimes", "usually", "just",
      "quite", "rather", "almost", "already", "still", "even", "only",
      "again", "further", "then", "here", "there", "now", "thus", "hence",
      "therefore", "however", "moreover", "furthermore", "nevertheless",
      "nonetheless", "meanwhile", "instead", "otherwise", "perhaps",
      "maybe", "indeed", "anyway", "away", "back", "forth", "together",
      "apart", "soon", "later", "ago", "too", "very", "well", "also",
      "else", "ever", "why", "how",
      // abbreviations and glue
      "etc", "vs", "ie", "eg", "et", "al", "non",
  };
  return words;
}

inline const WordSet& verb_words() {
  static const WordSet words = {
      "absorb", "accelerate", "accept", "accompany", "accomplish",
      "accumulate", "achieve", "acquire", "act", "adapt", "add", "admit",
      "adopt", "advise", "affect", "agree", "align", "alleviate",
      "allocate", "allow", "alter", "amplify", "analyse", "analyze",
      "annotate", "anticipate", "appear", "append", "apply", "approve",
      "argue", "arise", "arrange", "arrive", "articulate", "ascertain",
      "ask", "assemble", "assert", "assess", "assign", "associate",
      "assume", "attach", "attain", "attempt", "attend", "augment",
      "automate", "avoid", "await", "become", "begin", "behave",
      "believe", "belong", "bind", "blend", "boost", "borrow", "break",
      "bring", "broaden", "browse", "build", "buy", "bypass", "calculate",
      "calibrate", "call", "cancel", "capture", "carry", "catch",
      "categorize", "cease", "characterize", "check", "choose",
      "circumvent", "cite", "clarify", "classify", "climb", "coincide",
      "collaborate", "collect", "collide", "combine", "come", "commence",
      "communicate", "compare", "compensate", "compete", "compile",
      "complicate", "compose", "comprise", "compress", "compute",
      "conceal", "conceive", "concentrate", "conclude", "condense",
      "conduct", "configure", "confine", "confirm", "conform",
      "confront", "confuse", "connect", "conserve", "consider",
      "consist", "consolidate", "constitute", "constrain", "consult",
      "consume", "continue", "contradict", "contribute", "convert",
      "convey", "convince", "cooperate", "cope", "correlate",
      "corroborate", "correspond", "corrupt", "cost", "cover", "crawl",
      "create", "cut", "deal", "debug", "deceive", "decide", "decode",
      "decompose", "decrease", "dedicate", "deduce", "deem", "defend",
      "defer", "define", "degrade", "delegate", "delete", "deliver",
      "demonstrate", "denote", "depart", "depend", "depict", "deploy",
      "deprive", "derive", "descend", "describe", "deserve", "destroy",
      "detect", "deteriorate", "determine", "develop", "devise",
      "devote", "dictate", "die", "differ", "differentiate", "diminish",
      "disappear", "discard", "disclose", "disconnect", "discover",
      "discriminate", "discuss", "dismiss", "dispatch", "dispose",
      "disrupt", "dissect", "distinguish", "distort", "distribute",
      "disturb", "diverge", "divert", "dominate", "doubt", "download",
      "draw", "drive", "drop", "earn", "ease", "eat", "edit", "educate",
      "elaborate", "elevate", "elicit", "eliminate", "elucidate",
      "embed", "embrace", "emerge", "emit", "emphasize", "employ",
      "empower", "emulate", "enable", "encapsulate", "encode",
      "encompass", "encounter", "encourage", "endorse", "endure",
      "enforce", "engage", "enhance", "enjoy", "enlarge", "enrich",
      "enroll", "ensure", "entail", "enter", "enumerate", "envision",
      "equip", "eradicate", "erase", "establish", "evaluate", "evolve",
      "exacerbate", "exaggerate", "examine", "exceed", "excel",
      "exclude", "execute", "exemplify", "exert", "exhibit", "exist",
      "expand", "expect", "expend", "expire", "explain", "explicate",
      "exploit", "explore", "expose", "express", "extend", "extract",
      "extrapolate", "fabricate", "facilitate", "fail", "fall", "favor",
      "feel", "fetch", "fill", "finalize", "find", "finish", "fit",
      "flourish", "fluctuate", "follow", "forbid", "foresee", "forget",
      "formalize", "formulate", "foster", "fulfill", "gather",
      "generalize", "generate", "get", "give", "go", "govern", "grasp",
      "grow", "guarantee", "halt", "hamper", "happen", "harness",
      "hear", "help", "hinder", "hire", "hold", "hope", "hypothesize",
      "identify", "ignore", "illuminate", "illustrate", "imagine",
      "imitate", "immerse", "impair", "impede", "implement", "imply",
      "impose", "improve", "include", "incorporate", "increase",
      "incur", "indicate", "induce", "infect", "infer", "inflate",
      "inform", "inherit", "inhibit", "initialize", "initiate",
      "inject", "injure", "insert", "inspect", "inspire", "install",
      "instantiate", "instruct", "integrate", "intend", "intensify",
      "interact", "intercept", "interfere", "interpolate", "interpret",
      "interrupt", "intervene", "introduce", "invent", "invert",
      "invest", "investigate", "invoke", "involve", "isolate",
      "iterate", "jump", "justify", "keep", "kill", "know", "launch",
      "lead", "learn", "leave", "lend", "lessen", "let", "leverage",
      "lie", "lift", "listen", "live", "locate", "look", "lose",
      "magnify", "maintain", "make", "manage", "manifest", "manipulate",
      "materialize", "maximize", "mediate", "meet", "memorize",
      "mention", "merge", "migrate", "mimic", "minimize", "misclassify",
      "mislead", "miss", "mitigate", "modify", "modulate", "motivate",
      "move", "multiply", "navigate", "necessitate", "need", "negotiate",
      "nominate", "normalize", "note", "notice", "notify", "nullify",
      "obey", "oblige", "obscure", "observe", "obstruct", "obtain",
      "obviate", "occupy", "occur", "offer", "omit", "operate",
      "oppose", "optimize", "orchestrate", "organize", "orient",
      "originate", "oscillate", "outline", "outperform", "overcome",
      "overlook", "override", "oversee", "overwhelm", "owe",
      "participate", "parse", "pay", "penalize", "perceive", "perform",
      "permit", "persist", "persuade", "pertain", "pinpoint", "play",
      "polish", "populate", "pose", "posit", "possess", "postpone",
      "postulate", "precede", "preclude", "predict", "prefer",
      "prepare", "prescribe", "present", "preserve", "pretend",
      "prevail", "prevent", "prioritize", "proceed", "procure",
      "produce", "prohibit", "proliferate", "prolong", "promote",
      "prompt", "propagate", "propose", "protect", "prove", "provide",
      "prune", "publish", "pull", "pursue", "push", "put", "qualify",
      "quantify", "raise", "reach", "react", "read", "realize",
      "reassure", "rebuild", "recast", "receive", "reckon", "recognize",
      "recommend", "recompute", "reconcile", "reconsider",
      "reconstruct", "recover", "recruit", "rectify", "recur",
      "redesign", "rediscover", "reduce", "refer", "refine", "reflect",
      "reformulate", "refrain", "refute", "regain", "regard",
      "regulate", "reinforce", "reiterate", "reject", "relate", "relax",
      "relieve", "relocate", "rely", "remain", "remark", "remedy",
      "remember", "remind", "remove", "render", "renew", "reorganize",
      "repair", "repeat", "rephrase", "replace", "replicate",
      "represent", "reproduce", "require", "rescale", "resemble",
      "reset", "reshape", "reside", "resign", "resist", "resolve",
      "respond", "restart", "restore", "restrict", "restructure",
      "retain", "rethink", "retrain", "retrieve", "return", "reuse",
      "reveal", "reverse", "revert", "revise", "revisit", "rewrite",
      "rid", "rise", "rotate", "run", "sacrifice", "satisfy", "save",
      "say", "scatter", "scrutinize", "seal", "see", "seek", "seem",
      "seize", "select", "sell", "send", "serve", "settle", "shed",
      "ship", "shorten", "show", "shrink", "signify", "simplify",
      "simulate", "situate", "skip", "solve", "sort", "spawn", "speak",
      "specialize", "specify", "speculate", "spend", "squeeze",
      "stabilize", "stand", "standardize", "start", "stay", "steer",
      "stimulate", "stop", "strengthen", "stretch", "strive", "submit",
      "subdivide", "subsume", "subtract", "succeed", "suffer",
      "suffice", "suggest", "summarize", "supervise", "suppose",
      "surpass", "surround", "survive", "sustain", "swap", "symbolize",
      "synthesize", "tackle", "tailor", "take", "talk", "teach", "tell",
      "tend", "terminate", "testify", "theorize", "think", "threaten",
      "tighten", "tolerate", "transcend", "transcribe", "translate",
      "transmit", "traverse", "treat", "trim", "try", "tune", "turn",
      "tweak", "undergo", "underestimate", "underline", "undermine",
      "underpin", "underscore", "understand", "undertake", "unfold",
      "unify", "unveil", "uphold", "upload", "urge", "use", "usher",
      "utilize", "validate", "vanish", "vary", "verify", "violate",
      "visualize", "want", "warn", "watch", "weaken", "weigh", "widen",
      "win", "wish", "withdraw", "withstand", "wonder", "worsen",
      "wrap", "write",
      // irregular past and participle forms
      "arose", "arisen", "ate", "became", "began", "begun", "bore",
      "borne", "bought", "brought", "built", "came", "chose", "chosen",
      "dealt", "done", "drawn", "drew", "driven", "drove", "fell",
      "fallen", "felt", "flew", "flown", "forgot", "forgotten", "found",
      "gave", "gone", "got", "gotten", "grew", "grown", "heard", "held",
      "hid", "hidden", "knew", "known", "laid", "lain", "lay", "led",
      "left", "lost", "made", "meant", "met", "paid", "proven",
      "proved", "ran", "rose", "risen", "said", "sat", "saw", "seen",
      "shown", "sold", "sought", "spent", "spoke", "spoken", "stood",
      "taken", "taught", "thought", "threw", "thrown", "told", "took",
      "understood", "went", "written", "wrote",
  };
  return words;
}

inline const WordSet& adjective_words() {
  static const WordSet words = {
      // participial adjectives the -ed rule would otherwise discard
      "advanced", "annotated", "automated", "balanced", "biased",
      "combined", "constrained", "coupled", "derived", "detailed",
      "directed", "distributed", "embedded", "extended", "fixed",
      "generalized", "improved", "integrated", "labeled", "labelled",
      "layered", "limited", "mixed", "nested", "normalized", "optimized",
      "ordered", "paired", "pooled", "randomized", "related", "shared",
      "structured", "supervised", "unbalanced", "unbiased", "undirected",
      "unified", "united", "unlabeled", "unordered", "unstructured",
      "unsupervised", "unweighted", "weighted", "infrared", "sacred",
      "widespread", "sophisticated",
      // -ly adjectives the adverb rule would otherwise discard
      "early", "likely", "unlikely", "costly", "timely", "friendly",
      "daily", "weekly", "monthly", "quarterly", "yearly", "scholarly",
      "orderly",
      // common adjectives without a distinctive suffix
      "fast", "slow", "quick", "good", "bad", "best", "worst", "better",
      "worse", "big", "small", "large", "long", "short", "high", "low",
      "wide", "narrow", "deep", "shallow", "strong", "weak", "hard",
      "soft", "easy", "difficult", "simple", "complex", "novel", "new",
      "old", "modern", "recent", "current", "previous", "next", "main",
      "major", "minor", "key", "central", "primary", "secondary",
      "important", "significant", "relevant", "irrelevant", "robust",
      "efficient", "inefficient", "accurate", "inaccurate", "precise",
      "exact", "approximate", "linear", "nonlinear", "binary",
      "discrete", "finite", "infinite", "smooth", "coarse", "fine",
      "raw", "clean", "noisy", "greedy", "lazy", "online", "offline",
      "realtime", "parallel", "serial", "concurrent", "necessary",
      "common", "particular", "similar", "different", "frequent",
      "infrequent", "subsequent", "consistent", "inconsistent",
      "persistent", "prominent", "apparent", "sufficient",
      "insufficient", "equivalent", "independent", "dependent",
      "intelligent", "coherent", "transparent", "adjacent", "salient",
      "dense", "sparse", "rich", "poor", "cheap", "expensive",
      "feasible", "infeasible", "static", "dynamic", "hybrid",
  };
  return words;
}

// Words the suffix heuristics would otherwise tag OTHER (-ing, -ly)
// but that function as nouns.
inline const WordSet& noun_exception_words() {
  static const WordSet words = {
      "beginning", "binding", "boosting", "building", "caching",
      "clustering", "coding", "computing", "crowdsourcing", "decoding",
      "embedding", "encoding", "engineering", "evening", "feeling",
      "filtering", "finding", "forecasting", "forwarding", "gaming",
      "handwriting", "hashing", "housing", "imaging", "indexing",
      "labeling", "labelling", "learning", "licensing", "mapping",
      "marketing", "matching", "meaning", "meeting", "mining",
      "modeling", "modelling", "monitoring", "morning", "networking",
      "parsing", "planning", "preprocessing", "pricing", "processing",
      "profiling", "programming", "pruning", "publishing", "ranking",
      "reasoning", "rendering", "routing", "sampling", "scaling",
      "scheduling", "screening", "sensing", "setting", "smoothing",
      "sorting", "spelling", "spring", "stemming", "streaming",
      "string", "switching", "testing", "thing", "timing", "tracking",
      "training", "tuning", "understanding", "warning", "weighting",
      "wing", "writing",
      // -ly nouns
      "family", "assembly", "anomaly", "supply", "monopoly",
      "butterfly", "poly",
  };
  return words;
}

inline bool ascii_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

}  // namespace detail

// Lexicon-plus-suffix tagger for English. It only needs to separate
// retained word classes (nouns, adjectives) from everything else, so
// ambiguous words default to NOUN. Lexicon checks run before suffix
// heuristics; plural stripping runs before both suffix passes so
// third-person verbs are caught.
class RuleTagger : public Tagger {
 public:
  PosTag tag(std::string_view w) const override {
    using namespace detail;
    if (closed_class_words().count(w)) return PosTag::Other;
    if (verb_words().count(w)) return PosTag::Other;
    if (adjective_words().count(w)) return PosTag::Adj;
    if (noun_exception_words().count(w)) return PosTag::Noun;

    if (w.size() >= 3 && w.back() == 's') {
      std::string singular = de_pluralize(w);
      if (!singular.empty()) {
        if (verb_words().count(singular)) return PosTag::Other;  // third person
        return PosTag::Noun;                                     // plural noun
      }
    }

    if (ends_with(w, "ly")) return PosTag::Other;

    for (std::string_view s : {"tion", "sion", "ment", "ness", "ity", "ism"})
      if (ends_with(w, s)) return PosTag::Noun;
    for (std::string_view s : {"ous", "ful", "ive", "ic", "al", "able", "ible", "less"})
      if (ends_with(w, s)) return PosTag::Adj;

    if (w.size() >= 4 && ends_with(w, "ed") && !ascii_vowel(w[w.size() - 3])) return PosTag::Other;
    if (w.size() >= 5 && ends_with(w, "ing") && !ascii_vowel(w[w.size() - 4])) return PosTag::Other;

    return PosTag::Noun;
  }

 private:
  // Returns the singular form of a plausible plural, or "" when the word
  // does not look like a plural at all.
  static std::string de_pluralize(std::string_view w) {
    using detail::ends_with;
    if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) return "";
    if (ends_with(w, "ies") && w.size() > 3) {
      std::string out(w.substr(0, w.size() - 3));
      out.push_back('y');
      return out;
    }
    for (std::string_view s : {"xes", "ches", "shes", "sses", "zes", "oes"})
      if (ends_with(w, s)) return std::string(w.substr(0, w.size() - 2));
    return std::string(w.substr(0, w.size() - 1));
  }
};

}  // namespace kex
