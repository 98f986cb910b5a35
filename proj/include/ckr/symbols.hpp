#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ckr {

using Id = std::int32_t;
inline constexpr Id kNoId = -1;

enum class NameKind : std::uint8_t { Individual, Concept, Role, Context };

inline const char* to_string(NameKind k) {
  switch (k) {
    case NameKind::Individual: return "individual";
    case NameKind::Concept: return "concept";
    case NameKind::Role: return "role";
    case NameKind::Context: return "context";
  }
  return "?";
}

/// Interning table for the four disjoint name spaces (NI, NC, NR, N).
/// The reserved concepts Top and Bot are pre-interned and are not part of NC.
class SymbolTable {
 public:
  SymbolTable() {
    top_ = intern_raw("Top", NameKind::Concept);
    bot_ = intern_raw("Bot", NameKind::Concept);
  }

  Id top() const { return top_; }
  Id bot() const { return bot_; }
  bool is_builtin_concept(Id id) const { return id == top_ || id == bot_; }

  /// Registers `name` under `kind`. Returns the id, or kNoId on a
  /// cross-kind conflict (the caller turns that into a diagnostic).
  Id intern(std::string_view name, NameKind kind) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) {
      if (kinds_[it->second] != kind) return kNoId;
      return it->second;
    }
    return intern_raw(name, kind);
  }

  /// Lookup without registration.
  Id find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? kNoId : it->second;
  }

  const std::string& name(Id id) const { return names_.at(static_cast<size_t>(id)); }
  NameKind kind(Id id) const { return kinds_.at(static_cast<size_t>(id)); }
  Id size() const { return static_cast<Id>(names_.size()); }

  std::vector<Id> all_of(NameKind k) const {
    std::vector<Id> out;
    for (Id i = 0; i < size(); ++i)
      if (kinds_[static_cast<size_t>(i)] == k && !is_builtin_concept(i)) out.push_back(i);
    return out;
  }

  bool operator==(const SymbolTable& o) const {
    return names_ == o.names_ && kinds_ == o.kinds_;
  }

 private:
  Id intern_raw(std::string_view name, NameKind kind) {
    Id id = static_cast<Id>(names_.size());
    names_.emplace_back(name);
    kinds_.push_back(kind);
    index_.emplace(names_.back(), id);
    return id;
  }

  std::vector<std::string> names_;
  std::vector<NameKind> kinds_;
  std::unordered_map<std::string, Id> index_;
  Id top_ = kNoId;
  Id bot_ = kNoId;
};

}  // namespace ckr
