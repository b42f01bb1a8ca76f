#include "cbnobs/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

namespace cbnobs {

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : Error(line_ > 0 ? "line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                            ": " + msg
                      : msg),
      line(line_),
      col(col_) {}

namespace {

struct Token {
    std::string_view text;
    int line;
    int col;  // 1-based
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.col);
}

// Splits one line into whitespace-separated tokens with column positions.
std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(start, i - start), line_no,
                          static_cast<int>(start) + 1});
    }
    return tokens;
}

// Parses the integer in `x<k>` / `u<k>` tokens. Returns -1 if malformed.
int index_of(std::string_view t, char prefix) {
    if (t.size() < 2 || t[0] != prefix) return -1;
    long value = 0;
    for (size_t i = 1; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return -1;
        value = value * 10 + (t[i] - '0');
        if (value > 100'000'000) return -1;
    }
    return value >= 1 ? static_cast<int>(value) : -1;
}

struct RawUpdate {
    Token lhs;
    std::vector<Token> args;  // empty means `true`
};

}  // namespace

NetworkFile parse_network(std::string_view text) {
    std::map<int, RawUpdate> updates;        // 1-based variable -> rhs tokens
    std::vector<Token> observe_tokens;
    std::vector<std::vector<Token>> output_lines;
    std::vector<char> inputs_declared;       // 1-based, grown on demand
    bool mode_seen = false;
    bool declarations_seen = false;
    UpdateMode mode = UpdateMode::And;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<Token> tokens = tokenize(line, line_no);
        if (tokens.empty() || tokens[0].text.front() == '#') continue;
        const Token& head = tokens[0];

        if (head.text == "mode:") {
            if (mode_seen) fail(head, "duplicate mode header");
            if (declarations_seen) fail(head, "mode header must precede declarations");
            if (tokens.size() != 2 || (tokens[1].text != "and" && tokens[1].text != "or"))
                fail(head, "expected `mode: and` or `mode: or`");
            mode = tokens[1].text == "or" ? UpdateMode::Or : UpdateMode::And;
            mode_seen = true;
            continue;
        }
        declarations_seen = true;

        if (head.text == "input") {
            if (tokens.size() < 2) fail(head, "input line declares no inputs");
            for (size_t i = 1; i < tokens.size(); ++i) {
                int k = index_of(tokens[i].text, 'u');
                if (k < 1) fail(tokens[i], "expected input name u<k>");
                if (static_cast<size_t>(k) > inputs_declared.size())
                    inputs_declared.resize(k, 0);
                if (inputs_declared[k - 1]) fail(tokens[i], "duplicate input declaration");
                inputs_declared[k - 1] = 1;
            }
            continue;
        }
        if (head.text == "observe") {
            if (tokens.size() < 2) fail(head, "observe line lists no variables");
            observe_tokens.insert(observe_tokens.end(), tokens.begin() + 1, tokens.end());
            continue;
        }
        if (head.text == "output") {
            if (tokens.size() < 2) fail(head, "output line lists no variables");
            output_lines.emplace_back(tokens.begin() + 1, tokens.end());
            continue;
        }

        int var = index_of(head.text, 'x');
        if (var < 1) fail(head, "expected an update line, `observe`, `output` or `input`");
        if (tokens.size() < 2 || tokens[1].text != "<-")
            fail(head, "expected `<-` after " + std::string(head.text));
        if (tokens.size() < 3) fail(head, "update right side is empty; write `true`");
        RawUpdate raw{head, {}};
        if (tokens.size() == 3 && tokens[2].text == "true") {
            // constant-1 update, no arguments
        } else {
            raw.args.assign(tokens.begin() + 2, tokens.end());
            for (const Token& t : raw.args)
                if (t.text == "true") fail(t, "`true` cannot be mixed with arguments");
        }
        auto [it, inserted] = updates.emplace(var, std::move(raw));
        if (!inserted) fail(head, "duplicate update line for " + std::string(head.text));
    }

    if (updates.empty()) throw ParseError("file declares no variables", 0, 0);
    const int n = updates.rbegin()->first;
    for (int v = 1; v <= n; ++v)
        if (!updates.count(v))
            throw ParseError("missing update line for x" + std::to_string(v), 0, 0);

    NetworkFile file;
    file.mode = mode;
    file.input_count = static_cast<int>(inputs_declared.size());
    for (size_t k = 0; k < inputs_declared.size(); ++k)
        if (!inputs_declared[k])
            throw ParseError("input u" + std::to_string(k + 1) +
                                 " missing from a contiguous u1..u" +
                                 std::to_string(inputs_declared.size()) + " block",
                             0, 0);

    file.net.n = n;
    file.net.updates.resize(n);
    file.input_args.resize(n);
    for (auto& [var, raw] : updates) {
        auto& xs = file.net.updates[var - 1];
        auto& us = file.input_args[var - 1];
        for (const Token& t : raw.args) {
            if (int j = index_of(t.text, 'x'); j >= 1) {
                if (std::find(xs.begin(), xs.end(), j - 1) != xs.end())
                    fail(t, "duplicate argument " + std::string(t.text));
                if (j > n) fail(t, "undefined variable " + std::string(t.text));
                xs.push_back(j - 1);
            } else if (int k = index_of(t.text, 'u'); k >= 1) {
                if (std::find(us.begin(), us.end(), k - 1) != us.end())
                    fail(t, "duplicate argument " + std::string(t.text));
                if (k > file.input_count) fail(t, "undeclared input " + std::string(t.text));
                us.push_back(k - 1);
            } else {
                fail(t, "expected argument x<i> or u<k>, got " + std::string(t.text));
            }
        }
        std::sort(xs.begin(), xs.end());
        std::sort(us.begin(), us.end());
    }

    for (const Token& t : observe_tokens) {
        int i = index_of(t.text, 'x');
        if (i < 1) fail(t, "expected variable name x<i>");
        if (i > n) fail(t, "observed index out of range: " + std::string(t.text));
        if (std::find(file.net.observed.begin(), file.net.observed.end(), i - 1) !=
            file.net.observed.end())
            fail(t, "duplicate observed variable " + std::string(t.text));
        file.net.observed.push_back(i - 1);
    }
    std::sort(file.net.observed.begin(), file.net.observed.end());

    for (const auto& line_tokens : output_lines) {
        std::vector<int> args;
        for (const Token& t : line_tokens) {
            int i = index_of(t.text, 'x');
            if (i < 1) fail(t, "expected variable name x<i>");
            if (i > n) fail(t, "undefined variable " + std::string(t.text));
            if (std::find(args.begin(), args.end(), i - 1) != args.end())
                fail(t, "duplicate argument " + std::string(t.text));
            args.push_back(i - 1);
        }
        std::sort(args.begin(), args.end());
        file.general_outputs.push_back(std::move(args));
    }

    file.net.validate();
    return file;
}

Cbn NetworkFile::to_cbn() const {
    if (mode == UpdateMode::Or)
        throw ParseError("file declares OR semantics; reduce it with --dbn first", 0, 0);
    if (has_inputs())
        throw ParseError("file declares control inputs; reduce it with --cbcn first", 0, 0);
    if (has_general_outputs())
        throw ParseError("file declares general outputs; reduce it with --aug-outputs first",
                         0, 0);
    return net;
}

Dbn NetworkFile::to_dbn() const {
    if (mode != UpdateMode::Or)
        throw ParseError("file is not an OR network (missing `mode: or`)", 0, 0);
    if (has_inputs() || has_general_outputs())
        throw ParseError("OR networks with inputs or general outputs are not supported",
                         0, 0);
    return Dbn{net};
}

Cbcn NetworkFile::to_cbcn() const {
    if (mode == UpdateMode::Or)
        throw ParseError("controlled networks must use AND semantics", 0, 0);
    if (has_general_outputs())
        throw ParseError("controlled networks with general outputs are not supported", 0, 0);
    return Cbcn{net, input_count, input_args};
}

GeneralOutputCbn NetworkFile::to_general_outputs() const {
    if (mode == UpdateMode::Or)
        throw ParseError("general-output reduction expects AND semantics", 0, 0);
    if (has_inputs())
        throw ParseError("general-output networks with inputs are not supported", 0, 0);
    GeneralOutputCbn g;
    g.net = net;
    g.net.observed.clear();
    for (int v : net.observed) g.outputs.push_back({v});
    for (const auto& args : general_outputs) g.outputs.push_back(args);
    return g;
}

Cbn parse_cbn(std::string_view text) {
    return parse_network(text).to_cbn();
}

std::string serialize_cbn(const Cbn& cbn) {
    cbn.validate();
    std::string out;
    for (int v = 0; v < cbn.n; ++v) {
        out += "x" + std::to_string(v + 1) + " <-";
        if (cbn.updates[v].empty()) {
            out += " true";
        } else {
            for (int j : cbn.updates[v]) out += " x" + std::to_string(j + 1);
        }
        out += "\n";
    }
    if (!cbn.observed.empty()) {
        out += "observe";
        for (int v : cbn.observed) out += " x" + std::to_string(v + 1);
        out += "\n";
    }
    return out;
}

}  // namespace cbnobs
