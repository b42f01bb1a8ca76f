#pragma once

#include <string_view>

#include "cbnobs/cbn.hpp"

namespace cbnobs {

// De Morgan: complementing every state variable turns OR updates into AND
// updates over the same arguments. The reduced network has the identical
// dependency graph and observed set; only the state encoding flips, so
// observability carries over unchanged.
Cbn reduce_dbn(const Dbn& dbn);

// Printed by the CLI next to reduce_dbn output so nobody runs the reduced
// network on uncomplemented states by accident.
inline constexpr std::string_view kDbnComplementNote =
    "states of the reduced network are the complements of the original states";

// Controlled network with every input pinned to 1: AND(1, args...) = AND(args...),
// so dropping the input arguments gives the autonomous network whose
// observability decides the controlled one.
Cbn reduce_cbcn(const Cbcn& cbcn);

// General AND outputs become fresh relay variables: variable n+j updates to
// the AND of output j's arguments and is observed directly. The relay lags
// the original output by one step, which costs nothing for observability.
Cbn reduce_general_outputs(const GeneralOutputCbn& g);

}  // namespace cbnobs
