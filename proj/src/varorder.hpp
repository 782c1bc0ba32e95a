#ifndef LAZCAD_VARORDER_HPP
#define LAZCAD_VARORDER_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lazcad {

/// Fixed variable order x_1 ≺ x_2 ≺ ... ≺ x_n. Position 0 is the least
/// variable, the last position is the main variable of the top-level
/// projection. Immutable; shared between all polynomials of one problem.
class VarOrder {
 public:
  explicit VarOrder(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int pos) const { return names_.at(pos); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  bool operator==(const VarOrder& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

inline VarOrderPtr make_order(std::vector<std::string> names) {
  return std::make_shared<const VarOrder>(std::move(names));
}

}  // namespace lazcad

#endif
