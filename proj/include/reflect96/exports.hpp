#pragma once

// Deterministic CSV/JSON renderings of every artifact the CLI can emit.

#include <string>

#include "reflect96/codes.hpp"
#include "reflect96/context.hpp"
#include "reflect96/molien.hpp"

namespace reflect96 {

std::string group_json(const Context& ctx);
std::string chartab_csv(const CharacterTable& t);
std::string chartab_json(const CharacterTable& t);
std::string decomposition_json(const Context& ctx, int i, int j);
std::string irreps_json(const IrrepSet& irreps);
std::string dims_json(const Context& ctx, int max_k);
bool dims_agree(const Context& ctx, int max_k);
std::string molien_json(const Context& ctx, int rep, int order);
std::string codes_json(const BinaryCode& code, const Context& ctx);
std::string theta_json(const BinaryCode& code, int order);

}  // namespace reflect96
