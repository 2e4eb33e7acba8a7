#pragma once

#include <string>
#include <variant>

#include "mopls/mtsp.hpp"
#include "mopls/mtspwp.hpp"

namespace mopls {

using AnyInstance = std::variant<MTSPInstance, MTSPWPInstance>;

// Text instance format:
//   MTSP <n> <d>            or   MTSPWP <n> <d1> <d2>
//   PLANE <k>                    (one block per cost objective)
//   <x> <y>                      (n lines)
//   PROFITS                      (MTSPWP only)
//   <p1> ... <pd2>               (n lines)
// Candidate lists are not stored; they are rebuilt on load.
void write_instance_file(const std::string& path, const MTSPInstance& inst);
void write_instance_file(const std::string& path, const MTSPWPInstance& inst);

AnyInstance load_instance_file(const std::string& path, int cand_k = 8);

inline int instance_objective_count(const AnyInstance& inst) {
  return std::visit([](const auto& i) {
    if constexpr (std::is_same_v<std::decay_t<decltype(i)>, MTSPInstance>)
      return i.d;
    else
      return i.d();
  }, inst);
}

}  // namespace mopls
