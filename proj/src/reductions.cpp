#include "cbnobs/reductions.hpp"

#include <algorithm>

namespace cbnobs {

Cbn reduce_dbn(const Dbn& dbn) {
    dbn.validate();
    // OR(a, b, ...) = NOT AND(NOT a, NOT b, ...): running the same argument
    // structure conjunctively on complemented states reproduces the OR
    // network exactly, and the readouts complement along with the states.
    return dbn.net;
}

Cbn reduce_cbcn(const Cbcn& cbcn) {
    cbcn.validate();
    // With every input held at 1 the input arguments are absorbed by the AND;
    // an update that consisted of inputs only becomes the empty product, i.e.
    // the constant 1.
    return cbcn.net;
}

Cbn reduce_general_outputs(const GeneralOutputCbn& g) {
    g.validate();
    const int n = g.net.n;
    const int m = static_cast<int>(g.outputs.size());
    Cbn result;
    result.n = n + m;
    result.updates = g.net.updates;
    result.updates.resize(n + m);
    for (int j = 0; j < m; ++j) {
        result.updates[n + j] = g.outputs[j];
        result.observed.push_back(n + j);
    }
    result.validate();
    return result;
}

}  // namespace cbnobs
