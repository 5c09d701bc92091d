// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "selfstab/rules.hpp"

namespace selfstab {

// CLI tokens: md2is | mis | mis-id.
enum class AlgorithmId { Md2is, MisCentral, MisIdBased };

AlgorithmId parse_algorithm(const std::string& token);
std::string algorithm_token(AlgorithmId id);
RuleSet rules_for(AlgorithmId id);

// R1: v.state=Out and every neighbor u has u.state=Out and exp(u)=0 -> In.
// R2: v.state=In and some neighbor u has u.state=In or exp(u)>1 -> Out.
// Anonymous (id-free); its distance-2 reasoning assumes one move at a time,
// so run it under a central daemon.
RuleSet md2is_rules();

// Entry: v.state=Out and no neighbor In -> In.
// Exit: v.state=In and some neighbor In -> Out.
// Central daemons only; the synchronous daemon can oscillate it forever.
RuleSet mis_central_rules();

// Id-symmetry-broken variant that converges under subset daemons.
// Entry: v is eligible (Out with no In neighbor) and every eligible neighbor
// has a larger id -> In. Exit: v.state=In and some In neighbor has a smaller
// id -> Out.
RuleSet mis_idbased_rules();

}  // namespace selfstab
