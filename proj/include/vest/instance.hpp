#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vest/error.hpp"
#include "vest/linalg.hpp"
#include "vest/scalar.hpp"

namespace vest {

/// A validated VEST instance (v, T_1..T_m, S) over one semiring. Functional
/// forms are detected once at construction and cached per transformation.
class VestInstance {
 public:
  VestInstance(Semiring semiring, Vector initial, std::vector<Matrix> transformations, Matrix selector)
      : semiring_(semiring),
        initial_(std::move(initial)),
        transformations_(std::move(transformations)),
        selector_(std::move(selector)) {
    if (transformations_.empty())
      throw Error(ErrorCode::empty_transformation_list, "at least one transformation is required");
    const std::size_t d = initial_.size();
    if (d == 0) throw Error(ErrorCode::dimension_mismatch, "state dimension must be positive");
    for (std::size_t i = 0; i < transformations_.size(); ++i) {
      const auto& t = transformations_[i];
      if (t.rows() != d || t.cols() != d)
        throw Error(ErrorCode::dimension_mismatch, "transformation " + std::to_string(i) + " is " +
                                                       std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                                                       ", expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (selector_.rows() == 0 || selector_.cols() != d)
      throw Error(ErrorCode::dimension_mismatch, "selector is " + std::to_string(selector_.rows()) + "x" +
                                                     std::to_string(selector_.cols()) + ", expected hx" +
                                                     std::to_string(d) + " with h >= 1");
    if (semiring_ == Semiring::gf2) {
      auto binary = [](const Rational& x) { return is_binary(x); };
      if (!initial_.is_binary()) throw Error(ErrorCode::non_binary_entry, "initial vector has a non-0/1 entry");
      for (std::size_t i = 0; i < transformations_.size(); ++i)
        if (!transformations_[i].all_entries(binary))
          throw Error(ErrorCode::non_binary_entry, "transformation " + std::to_string(i) + " has a non-0/1 entry");
      if (!selector_.all_entries(binary)) throw Error(ErrorCode::non_binary_entry, "selector has a non-0/1 entry");
    }
    functional_.reserve(transformations_.size());
    for (const auto& t : transformations_) functional_.push_back(to_functional(t));
  }

  Semiring semiring() const noexcept { return semiring_; }
  std::size_t dimension() const noexcept { return initial_.size(); }
  std::size_t selector_rows() const noexcept { return selector_.rows(); }
  std::size_t transformation_count() const noexcept { return transformations_.size(); }

  const Vector& initial() const noexcept { return initial_; }
  const Matrix& transformation(std::size_t i) const { return transformations_.at(i); }
  const std::vector<Matrix>& transformations() const noexcept { return transformations_; }
  const Matrix& selector() const noexcept { return selector_; }
  const std::optional<FunctionalMatrix>& functional_form(std::size_t i) const { return functional_.at(i); }

  bool all_functional() const {
    for (const auto& f : functional_)
      if (!f) return false;
    return true;
  }

  /// Same instance read in another semiring (validation reruns).
  VestInstance with_semiring(Semiring s) const { return VestInstance(s, initial_, transformations_, selector_); }

  /// Same instance with T_i replaced.
  VestInstance with_transformation(std::size_t i, Matrix t) const {
    auto ts = transformations_;
    ts.at(i) = std::move(t);
    return VestInstance(semiring_, initial_, std::move(ts), selector_);
  }

  friend bool operator==(const VestInstance& a, const VestInstance& b) {
    return a.semiring_ == b.semiring_ && a.initial_ == b.initial_ && a.transformations_ == b.transformations_ &&
           a.selector_ == b.selector_;
  }

 private:
  Semiring semiring_;
  Vector initial_;
  std::vector<Matrix> transformations_;
  Matrix selector_;
  std::vector<std::optional<FunctionalMatrix>> functional_;
};

/// Stable 64-bit FNV-1a digest of the instance contents, as 16 hex digits.
inline std::string fingerprint(const VestInstance& inst) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  auto feed_matrix = [&](const Matrix& m) {
    feed(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& e : m.row(r)) feed(std::to_string(r) + "," + std::to_string(e.column) + "=" + to_string(e.value));
  };
  feed(to_string(inst.semiring()));
  for (const auto& x : inst.initial().entries()) feed(to_string(x));
  for (const auto& t : inst.transformations()) feed_matrix(t);
  feed_matrix(inst.selector());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vest
