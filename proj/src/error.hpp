#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mtop {

// Engine-level failure classes. The C API maps these one-to-one onto
// mst_status codes, so additions here need a matching entry in msettop.h.
enum class Errc {
  invalid_argument,
  parse,
  space_mismatch,
  not_a_subset,
  malformed_family,
  budget_exceeded,
  algorithm_divergence,
  chain_of_subsets,
  unknown_claim,
  generation_failed,
};

class MtopError : public std::runtime_error {
public:
  MtopError(Errc code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw MtopError(code, msg);
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parse: return "parse-error";
    case Errc::space_mismatch: return "space-mismatch";
    case Errc::not_a_subset: return "not-a-subset";
    case Errc::malformed_family: return "malformed-family";
    case Errc::budget_exceeded: return "enumeration-budget";
    case Errc::algorithm_divergence: return "equivalence-violation";
    case Errc::chain_of_subsets: return "chain-of-subsets";
    case Errc::unknown_claim: return "unknown-claim";
    case Errc::generation_failed: return "basis-generation";
  }
  return "unknown";
}

}  // namespace mtop
