#ifndef CTT_NAMES_HPP
#define CTT_NAMES_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

namespace ctt {

// Variables carry a globally unique id; the hint is display-only and never
// participates in equality.  LF variables and computation-level variables
// live in disjoint namespaces.
namespace detail {
inline std::atomic<std::uint64_t>& name_counter() {
  static std::atomic<std::uint64_t> c{1};
  return c;
}
}  // namespace detail

inline std::uint64_t next_name_id() {
  return detail::name_counter().fetch_add(1, std::memory_order_relaxed);
}

struct LfVar {
  std::uint64_t id = 0;
  std::string hint;

  friend bool operator==(const LfVar& a, const LfVar& b) { return a.id == b.id; }
  friend bool operator!=(const LfVar& a, const LfVar& b) { return a.id != b.id; }
};

struct CompVar {
  std::uint64_t id = 0;
  std::string hint;

  friend bool operator==(const CompVar& a, const CompVar& b) { return a.id == b.id; }
  friend bool operator!=(const CompVar& a, const CompVar& b) { return a.id != b.id; }
};

inline LfVar fresh_lf_var(std::string hint) { return LfVar{next_name_id(), std::move(hint)}; }
inline CompVar fresh_comp_var(std::string hint) { return CompVar{next_name_id(), std::move(hint)}; }

}  // namespace ctt

template <>
struct std::hash<ctt::LfVar> {
  std::size_t operator()(const ctt::LfVar& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.id);
  }
};

template <>
struct std::hash<ctt::CompVar> {
  std::size_t operator()(const ctt::CompVar& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.id);
  }
};

#endif  // CTT_NAMES_HPP
