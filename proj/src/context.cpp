#include "context.hpp"

#include <set>

namespace noether {

VariableContext::VariableContext(std::vector<std::string> names,
                                 std::optional<std::size_t> hom_index)
    : names_(std::move(names)), hom_index_(hom_index) {
  if (names_.empty()) fail(ErrorKind::usage, "a context needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) fail(ErrorKind::usage, "empty variable name");
    if (!seen.insert(n).second)
      fail(ErrorKind::usage, "duplicate variable name '" + n + "'");
  }
  if (hom_index_ && *hom_index_ >= names_.size())
    fail(ErrorKind::usage, "homogenizing variable index out of range");
}

std::optional<std::size_t> VariableContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> VariableContext::affine_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (!hom_index_ || *hom_index_ != i) out.push_back(i);
  return out;
}

ContextPtr extend_context(const ContextPtr& ctx, const std::vector<std::string>& extra) {
  std::vector<std::string> names = ctx->names();
  names.insert(names.end(), extra.begin(), extra.end());
  return make_context(std::move(names), ctx->hom_index());
}

}  // namespace noether
