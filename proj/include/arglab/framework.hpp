// arglab :: argumentation frameworks and labelings
//
// An ArgumentationFramework is a finite set of named arguments plus a defeat
// relation (a directed graph; self-defeat is allowed). A Labeling assigns one
// of {in, out, undec} to every argument of one framework. Both are immutable
// once built and safe to share across threads.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arglab/errors.hpp"

namespace arglab {

// The three argument labels. Declaration order (in < out < undec) is the
// lexicographic order used wherever labelings are sorted or enumerated.
enum class Label : std::uint8_t { In = 0, Out = 1, Undec = 2 };

inline constexpr std::array<Label, 3> kLabels{Label::In, Label::Out, Label::Undec};

constexpr std::string_view to_string(Label l) {
  switch (l) {
    case Label::In: return "in";
    case Label::Out: return "out";
    case Label::Undec: return "undec";
  }
  return "?";
}

inline std::optional<Label> label_from_string(std::string_view s) {
  if (s == "in") return Label::In;
  if (s == "out") return Label::Out;
  if (s == "undec") return Label::Undec;
  return std::nullopt;
}

// Argument names are ASCII identifier tokens: [A-Za-z0-9_]+.
inline bool valid_argument_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

class ArgumentationFramework {
public:
  ArgumentationFramework() = default;

  // Declares a new argument and returns its index. Indices follow
  // declaration order and never change.
  std::size_t add_argument(std::string name) {
    if (!valid_argument_name(name))
      throw FrameworkError("invalid argument name '" + name + "'");
    if (index_.count(name) != 0)
      throw FrameworkError("duplicate argument '" + name + "'");
    names_.push_back(std::move(name));
    index_.emplace(names_.back(), names_.size() - 1);
    defeaters_.emplace_back();
    targets_.emplace_back();
    return names_.size() - 1;
  }

  // Adds source -> target to the defeat relation. Re-adding an existing
  // defeat is a no-op (the relation is a set).
  void add_defeat(std::size_t source, std::size_t target) {
    if (source >= names_.size() || target >= names_.size())
      throw FrameworkError("defeat endpoint out of range");
    if (defeats(source, target)) return;
    edges_.emplace_back(source, target);
    defeaters_[target].push_back(source);
    targets_[source].push_back(target);
  }

  void add_defeat(std::string_view source, std::string_view target) {
    add_defeat(require(source), require(target));
  }

  std::size_t argument_count() const noexcept { return names_.size(); }

  const std::vector<std::string>& arguments() const noexcept { return names_; }

  const std::string& name_of(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t require(std::string_view name) const {
    auto i = find(name);
    if (!i) throw FrameworkError("unknown argument '" + std::string(name) + "'");
    return *i;
  }

  // Arguments attacking `target`, in the order their defeats were added.
  const std::vector<std::size_t>& defeaters_of(std::size_t target) const {
    return defeaters_.at(target);
  }

  // Arguments attacked by `source`.
  const std::vector<std::size_t>& targets_of(std::size_t source) const {
    return targets_.at(source);
  }

  bool defeats(std::size_t source, std::size_t target) const {
    const auto& ds = defeaters_.at(target);
    return std::find(ds.begin(), ds.end(), source) != ds.end();
  }

  // Unique defeat pairs in insertion order.
  const std::vector<std::pair<std::size_t, std::size_t>>& defeat_list() const noexcept {
    return edges_;
  }

  std::size_t defeat_count() const noexcept { return edges_.size(); }

  // Same arguments in the same order and the same defeat set.
  friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
    if (a.names_ != b.names_) return false;
    auto ea = a.edges_, eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
  }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> defeaters_;
  std::vector<std::vector<std::size_t>> targets_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Total label assignment over one framework's arguments, indexed by argument
// index. Comparison is lexicographic with in < out < undec.
class Labeling {
public:
  Labeling() = default;

  explicit Labeling(std::size_t n, Label fill = Label::Undec) : labels_(n, fill) {}

  Labeling(std::initializer_list<Label> labels) : labels_(labels) {}

  static Labeling all_undec(const ArgumentationFramework& af) {
    return Labeling(af.argument_count());
  }

  std::size_t size() const noexcept { return labels_.size(); }

  Label operator[](std::size_t i) const { return labels_.at(i); }

  void set(std::size_t i, Label l) { labels_.at(i) = l; }

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling&, const Labeling&) = default;

private:
  std::vector<Label> labels_;
};

inline void require_same_arity(const ArgumentationFramework& af, const Labeling& l) {
  if (l.size() != af.argument_count())
    throw MismatchError("labeling covers " + std::to_string(l.size()) +
                        " arguments, framework has " + std::to_string(af.argument_count()));
}

}  // namespace arglab
