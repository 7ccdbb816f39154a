#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqo {

/// Input could not be tokenized/parsed; `pos` is the byte offset of the
/// offending character in the original text.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::string msg, std::size_t at)
      : std::runtime_error(std::move(msg) + " (at position " + std::to_string(at) + ")"),
        pos(at) {}
};

/// Input parsed but violates a structural invariant (e.g. a non-monotone
/// sequence, or a term rejected by a formation clause). Distinct from
/// ParseError so callers can tell syntax from semantics.
struct ValidityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element does not match the shape required by its order expression.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract (e.g. a witness was
/// requested for a pair that is actually comparable).
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Square boolean matrix backed by 64-bit rows; used by the exhaustive
/// suites for transitivity checks over enumerated universes.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }

  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  /// True when row i is a superset of row j (row_j implies row_i pointwise).
  bool row_contains(std::size_t i, std::size_t j) const {
    const std::uint64_t* a = &bits_[i * words_];
    const std::uint64_t* b = &bits_[j * words_];
    for (std::size_t w = 0; w < words_; ++w)
      if (b[w] & ~a[w]) return false;
    return true;
  }

 private:
  std::size_t n_, words_;
  std::vector<std::uint64_t> bits_;
};

/// Runs fn(i) for i in [0,n) sharded over `workers` threads. The caller's
/// fn must only touch per-i state; merging is the caller's business.
void parallel_for(long n, int workers, const std::function<void(long)>& fn);

std::vector<std::string> split(const std::string& text, char sep);

}  // namespace bqo
