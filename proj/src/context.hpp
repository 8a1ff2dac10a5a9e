#ifndef NOETHER_CONTEXT_HPP
#define NOETHER_CONTEXT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace noether {

// An ordered list of variable names, optionally designating one of them as
// the homogenizing variable (the projective x_0). Contexts are immutable and
// shared; two contexts are interchangeable iff they are structurally equal.
class VariableContext {
 public:
  VariableContext(std::vector<std::string> names,
                  std::optional<std::size_t> hom_index = std::nullopt);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> hom_index() const noexcept { return hom_index_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  // Variable indices excluding the homogenizing one, in context order.
  std::vector<std::size_t> affine_indices() const;

  bool operator==(const VariableContext& other) const noexcept {
    return names_ == other.names_ && hom_index_ == other.hom_index_;
  }

 private:
  std::vector<std::string> names_;
  std::optional<std::size_t> hom_index_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

inline ContextPtr make_context(std::vector<std::string> names,
                               std::optional<std::size_t> hom_index = {}) {
  return std::make_shared<const VariableContext>(std::move(names), hom_index);
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b))
    fail(ErrorKind::context_mismatch, "operands live in different variable contexts");
}

// Context with extra variables appended at the end (used for the Rabinowitsch
// trick and the t-trick intersections; the new names use '@' so they can never
// collide with parsed user variables).
ContextPtr extend_context(const ContextPtr& ctx, const std::vector<std::string>& extra);

}  // namespace noether

#endif
