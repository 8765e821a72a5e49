#include "qwalk/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string_view to_string(Mode m) {
    switch (m) {
    case Mode::forward: return "forward";
    case Mode::reverse: return "reverse";
    case Mode::ico: return "ico";
    case Mode::ico_step: return "ico-step";
    case Mode::full_ico: return "full-ico";
    }
    return "?";
}

std::string_view to_string(Observable o) {
    switch (o) {
    case Observable::dist: return "dist";
    case Observable::spread: return "spread";
    case Observable::td: return "td";
    case Observable::blp: return "blp";
    case Observable::entropy: return "entropy";
    case Observable::concurrence: return "concurrence";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

// Recursive descent over complex values:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | postfix
//   postfix := primary (implicit-multiplied 'pi' | 'i' | '(' ...)*
//   primary := number | 'pi' | 'i' | 'sqrt' '(' expr ')' | '(' expr ')'
class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) : s_(text) {}

    Complex parse() {
        const Complex v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(s_.substr(pos_)) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ConfigError("malformed numeric literal '" + std::string(s_) + "': " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }

    Complex expr() {
        Complex v = term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    Complex term() {
        Complex v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                const Complex d = unary();
                if (d == Complex{}) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Complex unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return postfix();
    }

    Complex postfix() {
        Complex v = primary();
        while (true) {
            skip_ws();
            if (eat_word("pi"))
                v *= kPi;
            else if (eat_word("sqrt"))
                v *= sqrt_call();
            else if (eat('i'))
                v *= kI;
            else if (pos_ < s_.size() && s_[pos_] == '(')
                v *= paren();
            else
                return v;
        }
    }

    Complex paren() {
        if (!eat('(')) fail("expected '('");
        const Complex v = expr();
        if (!eat(')')) fail("expected ')'");
        return v;
    }

    Complex sqrt_call() { return std::sqrt(paren()); }

    Complex primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = 0.0;
            const auto* first = s_.data() + pos_;
            const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
            if (ec != std::errc{}) fail("bad number");
            pos_ += static_cast<std::size_t>(ptr - first);
            return v;
        }
        if (eat_word("pi")) return kPi;
        if (eat_word("sqrt")) return sqrt_call();
        if (c == 'i') {
            ++pos_;
            return kI;
        }
        if (c == '(') return paren();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

struct Entry {
    std::string value;
    int line;
};

constexpr std::string_view kKnownKeys[] = {"mode",  "k",           "thetas",  "theta_s",    "steps", "alpha",
                                           "beta",  "permutation", "observables", "lattice", "allow_wrap", "out"};

std::size_t parse_count(const Entry& e, std::string_view key) {
    std::size_t v = 0;
    const auto s = trim(e.value);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError(std::string(key) + " must be a non-negative integer, got '" + e.value + "'", e.line);
    return v;
}

Literal parse_literal_at(const std::string& text, int line) {
    try {
        return make_literal(text);
    } catch (const ConfigError& err) {
        throw ConfigError(err.what(), line);
    }
}

Literal parse_angle(const std::string& text, int line, std::string_view key) {
    Literal l = parse_literal_at(text, line);
    if (l.value.imag() != 0.0) throw ConfigError(std::string(key) + " must be real, got '" + text + "'", line);
    return l;
}

Mode parse_mode(const Entry& e) {
    const auto v = trim(e.value);
    for (Mode m : {Mode::forward, Mode::reverse, Mode::ico, Mode::ico_step, Mode::full_ico})
        if (v == to_string(m)) return m;
    throw ConfigError("unknown mode '" + e.value + "' (forward, reverse, ico, ico-step, full-ico)", e.line);
}

Observable parse_observable(std::string_view v, int line) {
    for (Observable o : {Observable::dist, Observable::spread, Observable::td, Observable::blp, Observable::entropy,
                         Observable::concurrence})
        if (v == to_string(o)) return o;
    throw ConfigError("unknown observable '" + std::string(v) + "'", line);
}

bool parse_bool(const Entry& e) {
    const auto v = trim(e.value);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("allow_wrap must be true or false, got '" + e.value + "'", e.line);
}

} // namespace

Complex evaluate_literal(std::string_view text) {
    const auto t = trim(text);
    if (t.empty()) throw ConfigError("empty numeric literal");
    const Complex v = LiteralParser(t).parse();
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw ConfigError("numeric literal '" + std::string(t) + "' is not finite");
    return v;
}

Literal make_literal(std::string_view text) { return {evaluate_literal(text), std::string(trim(text))}; }

std::vector<double> ExperimentConfig::theta_values() const {
    std::vector<double> v;
    for (const auto& t : thetas) v.push_back(t.real());
    return v;
}

bool ExperimentConfig::wants(Observable o) const {
    return std::find(observables.begin(), observables.end(), o) != observables.end();
}

ExperimentConfig parse_config(std::string_view text) {
    std::map<std::string, Entry, std::less<>> entries;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) == std::end(kKnownKeys))
            throw ConfigError("unknown key '" + key + "'", line_no);
        if (value.empty()) throw ConfigError("missing value for '" + key + "'", line_no);
        if (entries.count(key)) throw ConfigError("duplicate key '" + key + "'", line_no);
        entries.emplace(key, Entry{value, line_no});
    }
    const auto find = [&](std::string_view key) -> const Entry* {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };

    ExperimentConfig c;
    if (const auto* e = find("mode")) c.mode = parse_mode(*e);
    const Entry* steps = find("steps");
    if (!steps) throw ConfigError("missing required key 'steps'");
    c.steps = parse_count(*steps, "steps");
    if (const auto* e = find("theta_s")) c.theta_s = parse_angle(e->value, e->line, "theta_s");
    if (const auto* e = find("alpha")) c.alpha = parse_literal_at(e->value, e->line);
    if (const auto* e = find("beta")) c.beta = parse_literal_at(e->value, e->line);
    if (const auto* e = find("allow_wrap")) c.allow_wrap = parse_bool(*e);
    if (const auto* e = find("out")) c.out = e->value;
    if (const auto* e = find("lattice")) c.lattice = parse_count(*e, "lattice");
    if (const auto* e = find("observables")) {
        c.observables.clear();
        for (auto name : split(e->value, ',')) {
            const Observable o = parse_observable(name, e->line);
            if (!c.wants(o)) c.observables.push_back(o);
        }
    }
    const Entry* thetas = find("thetas");
    if (thetas)
        for (auto t : split(thetas->value, ',')) c.thetas.push_back(parse_angle(std::string(t), thetas->line, "thetas"));
    const Entry* k = find("k");
    if (k) {
        c.period = parse_count(*k, "k");
        if (c.period == 0) throw ConfigError("period k must be positive", k->line);
    }
    const int mode_line = find("mode") ? find("mode")->line : 0;
    const int k_line = k ? k->line : (thetas ? thetas->line : mode_line);

    // Mode constraints first: they are independent of the coin angles.
    if (c.mode == Mode::ico_step) {
        if (c.steps % 2 != 0) throw ConfigError("ico-step requires an even step count N", steps->line);
        if (c.period != 0 && c.period != 2) throw ConfigError("ico-step requires k = 2", k_line);
    }
    if (c.mode == Mode::full_ico && c.period != 0) {
        if (c.period > 5) throw ConfigError("full-ico requires k <= 5", k_line);
        if (c.steps % c.period != 0) throw ConfigError("full-ico requires k to divide the step count", steps->line);
    }

    if (!thetas) throw ConfigError("missing required key 'thetas'");
    if (c.period == 0) c.period = c.thetas.size();
    if (c.thetas.size() != c.period)
        throw ConfigError("thetas lists " + std::to_string(c.thetas.size()) + " angle(s) but k = " +
                              std::to_string(c.period),
                          thetas->line);
    if (c.mode == Mode::ico_step && c.period != 2) throw ConfigError("ico-step requires k = 2", k_line);
    if (c.mode == Mode::full_ico) {
        if (c.period > 5) throw ConfigError("full-ico requires k <= 5", k_line);
        if (c.steps % c.period != 0) throw ConfigError("full-ico requires k to divide the step count", steps->line);
    }

    if (const auto* e = find("permutation")) {
        std::vector<int> perm;
        for (auto p : split(e->value, ',')) {
            int v = 0;
            const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
            if (ec != std::errc{} || ptr != p.data() + p.size())
                throw ConfigError("permutation entries must be integers", e->line);
            perm.push_back(v);
        }
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i + 1) || sorted.size() != c.period)
                throw ConfigError("permutation must reorder 1..k", e->line);
        c.permutation = std::move(perm);
    }

    const double n2 = std::norm(c.alpha.value) + std::norm(c.beta.value);
    if (std::abs(n2 - 1.0) > 1e-12) {
        const Entry* e = find("alpha") ? find("alpha") : find("beta");
        throw ConfigError("initial coin must satisfy |alpha|^2 + |beta|^2 = 1", e ? e->line : 0);
    }
    if (c.lattice) {
        const int line = find("lattice")->line;
        if (*c.lattice == 0 || *c.lattice % 2 == 0) throw ConfigError("lattice must be a positive odd integer", line);
        if (*c.lattice < 2 * c.steps + 3 && !c.allow_wrap)
            throw ConfigError("lattice smaller than 2N+3 requires allow_wrap = true", line);
    }
    return c;
}

std::string format_config(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "mode = " << to_string(c.mode) << '\n';
    os << "k = " << c.period << '\n';
    os << "thetas = ";
    for (std::size_t i = 0; i < c.thetas.size(); ++i) os << (i ? ", " : "") << c.thetas[i].text;
    os << '\n';
    os << "theta_s = " << c.theta_s.text << '\n';
    os << "steps = " << c.steps << '\n';
    os << "alpha = " << c.alpha.text << '\n';
    os << "beta = " << c.beta.text << '\n';
    if (!c.permutation.empty()) {
        os << "permutation = ";
        for (std::size_t i = 0; i < c.permutation.size(); ++i) os << (i ? ", " : "") << c.permutation[i];
        os << '\n';
    }
    os << "observables = ";
    for (std::size_t i = 0; i < c.observables.size(); ++i) os << (i ? ", " : "") << to_string(c.observables[i]);
    os << '\n';
    if (c.lattice) os << "lattice = " << *c.lattice << '\n';
    if (c.allow_wrap) os << "allow_wrap = true\n";
    if (!c.out.empty()) os << "out = " << c.out << '\n';
    return os.str();
}

ExperimentConfig parse_metadata(std::string_view csv_text) {
    std::string block;
    bool inside = false;
    bool found = false;
    std::istringstream in{std::string(csv_text)};
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] != '#') break;
        std::string_view body = trim(std::string_view(line).substr(1));
        if (!body.empty() && body.front() == '[') {
            inside = body == "[config]";
            found = found || inside;
            continue;
        }
        if (inside) {
            block.append(body);
            block.push_back('\n');
        }
    }
    if (!found) throw ConfigError("no [config] block in metadata");
    return parse_config(block);
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    const auto lit_eq = [](const Literal& x, const Literal& y) { return x.value == y.value && x.text == y.text; };
    if (a.thetas.size() != b.thetas.size()) return false;
    for (std::size_t i = 0; i < a.thetas.size(); ++i)
        if (!lit_eq(a.thetas[i], b.thetas[i])) return false;
    return a.mode == b.mode && a.period == b.period && lit_eq(a.theta_s, b.theta_s) && a.steps == b.steps &&
           lit_eq(a.alpha, b.alpha) && lit_eq(a.beta, b.beta) && a.permutation == b.permutation &&
           a.observables == b.observables && a.lattice == b.lattice && a.allow_wrap == b.allow_wrap && a.out == b.out;
}

} // namespace qwalk
