#pragma once

#include <stdexcept>
#include <string>

namespace markov {

enum class errc {
  empty_word,
  not_coprime,
  out_of_range,
  unstable,
  non_decomposable,
  horizon_too_small,
  rational_input,
  not_eventually_periodic,
  side_condition_violated,
  invalid_prefix,
  invalid_digit,
  has_bad_cut,
  mismatched_pair,
  index_beyond_rational,
  incompatible_fields,
  division_by_zero,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_word: return "EmptyWord";
    case errc::not_coprime: return "NotCoprime";
    case errc::out_of_range: return "OutOfRange";
    case errc::unstable: return "Unstable";
    case errc::non_decomposable: return "NonDecomposable";
    case errc::horizon_too_small: return "HorizonTooSmall";
    case errc::rational_input: return "RationalInput";
    case errc::not_eventually_periodic: return "NotEventuallyPeriodic";
    case errc::side_condition_violated: return "SideConditionViolated";
    case errc::invalid_prefix: return "InvalidPrefix";
    case errc::invalid_digit: return "InvalidDigit";
    case errc::has_bad_cut: return "HasBadCut";
    case errc::mismatched_pair: return "MismatchedPair";
    case errc::index_beyond_rational: return "IndexBeyondRational";
    case errc::incompatible_fields: return "IncompatibleFields";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace markov
