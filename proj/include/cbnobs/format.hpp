#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cbnobs/cbn.hpp"
#include "cbnobs/errors.hpp"

namespace cbnobs {

enum class UpdateMode { And, Or };

// Everything a network file can declare. Plain conjunctive networks use only
// `mode = And` and the `net` field; OR semantics, control inputs and general
// AND outputs are all optional extras of the same grammar.
struct NetworkFile {
    UpdateMode mode = UpdateMode::And;
    Cbn net;
    int input_count = 0;
    std::vector<std::vector<int>> input_args;      // per variable
    std::vector<std::vector<int>> general_outputs; // explicit `output` lines only

    bool has_inputs() const { return input_count > 0; }
    bool has_general_outputs() const { return !general_outputs.empty(); }
    bool plain() const {
        return mode == UpdateMode::And && !has_inputs() && !has_general_outputs();
    }

    // Conversions; each throws ParseError when the file declares features the
    // requested view cannot carry (e.g. to_cbn() on a `mode: or` file).
    Cbn to_cbn() const;
    Dbn to_dbn() const;
    Cbcn to_cbcn() const;
    // observe lines become singleton outputs (ascending), then explicit
    // output lines in file order.
    GeneralOutputCbn to_general_outputs() const;
};

// Text format v1, line oriented:
//   # comment
//   mode: and|or          (optional, at most once, before declarations)
//   input u<k>            (declares control inputs; u-indices must be 1..m)
//   x<i> <- x<j> ... | true
//   observe x<i> ...
//   output x<i> ...       (one AND output over the listed variables)
// Variables must form a contiguous 1..n block of update lines; duplicate
// update lines, duplicate arguments, duplicate observed indices and undefined
// references are all errors. Reported positions are 1-based.
NetworkFile parse_network(std::string_view text);

// parse_network restricted to plain conjunctive files.
Cbn parse_cbn(std::string_view text);

// Deterministic canonical text: update lines ascending, arguments ascending,
// one trailing `observe` line when the observed set is nonempty.
std::string serialize_cbn(const Cbn& cbn);

}  // namespace cbnobs
