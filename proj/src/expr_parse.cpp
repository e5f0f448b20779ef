#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include "hilbint/param.hpp"

namespace hilbint::param {

namespace {

// Recursive-descent parser for the expression grammar documented in
// param.hpp. Errors carry the character offset of the failure.
class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ParamFn parse() {
        ParamFn fn = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return fn;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ExpressionParseError("expression parse error at offset " +
                                   std::to_string(pos_) + ": " + what + " in \"" + text_ +
                                   "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }

    double number() {
        skip_ws();
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("expected number");
        pos_ += static_cast<std::size_t>(end - begin);
        return v;
    }

    ParamFn expr() {
        ParamFn lhs = term();
        while (peek() == '+') {
            ++pos_;
            lhs = sum(lhs, term());
        }
        return lhs;
    }

    ParamFn term() {
        ParamFn lhs = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                lhs = product(lhs, factor());
            } else if (c == '/') {
                ++pos_;
                lhs = quotient(lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    ParamFn factor() {
        ParamFn base = primary();
        if (peek() == '^') {
            ++pos_;
            base = real_power(base, number());
        }
        return base;
    }

    ParamFn primary() {
        if (eat('(')) {
            ParamFn inner = expr();
            expect(')');
            return inner;
        }
        const std::string name = ident();
        expect('(');
        ParamFn fn = call(name);
        expect(')');
        return fn;
    }

    ParamFn call(const std::string& name) {
        if (name == "const") return constant(number());
        if (name == "pow") return power(number());
        if (name == "logms") {
            std::vector<double> exps;
            exps.push_back(number());
            while (eat(',')) exps.push_back(number());
            return log_multiscale(exps);
        }
        if (name == "karamata") return karamata_call();
        if (name == "clamp") {
            ParamFn inner = expr();
            expect(',');
            return low_cutoff_clamp(inner, number());
        }
        if (name == "iparam") {
            ParamFn phi = expr();
            expect(',');
            const double eps = number();
            expect(',');
            return interp_parameter(phi, eps, number());
        }
        if (name == "pscale") {
            ParamFn phi = expr();
            expect(',');
            const double s = number();
            expect(',');
            return power_scaled(phi, s, number());
        }
        if (name == "qsvcomp") {
            ParamFn chi = expr();
            expect(',');
            const double theta = number();
            expect(',');
            return qsv_compose(chi, theta, expr());
        }
        if (name == "comp") {
            ParamFn outer = expr();
            expect(',');
            return compose(outer, expr());
        }
        if (name == "reiterate") {
            ParamFn f = expr();
            expect(',');
            ParamFn g = expr();
            expect(',');
            return reiteration_omega(f, g, expr());
        }
        if (name == "dual") return dual_parameter(expr());
        fail("unknown function '" + name + "'");
    }

    AlphaSpec alpha_spec() {
        const std::string tag = ident();
        if (tag == "zero") return AlphaSpec::zero();
        if (tag == "inv_log") {
            expect('(');
            const double a = number();
            expect(')');
            return AlphaSpec::inv_log(a);
        }
        if (tag == "inv_pow") {
            expect('(');
            const double a = number();
            expect(',');
            const double p = number();
            expect(')');
            return AlphaSpec::inv_pow(a, p);
        }
        if (tag == "sin_log") {
            expect('(');
            const double a = number();
            expect(')');
            return AlphaSpec::sin_log_over_log(a);
        }
        fail("unknown alpha tag '" + tag + "'");
    }

    BetaSpec beta_spec() {
        const std::string tag = ident();
        if (tag == "const") {
            expect('(');
            const double b = number();
            expect(')');
            return BetaSpec::constant(b);
        }
        if (tag == "sin_loglog") {
            expect('(');
            const double b = number();
            expect(')');
            return BetaSpec::sin_log_log(b);
        }
        if (tag == "step") {
            expect('(');
            const double b = number();
            expect(',');
            const double t0 = number();
            expect(')');
            return BetaSpec::step(b, t0);
        }
        fail("unknown beta tag '" + tag + "'");
    }

    ParamFn karamata_call() {
        // karamata(alpha=TAG, beta=TAG, r=NUM) with keys in any order.
        std::optional<AlphaSpec> alpha;
        std::optional<BetaSpec> beta;
        std::optional<double> r;
        for (;;) {
            const std::string key = ident();
            expect('=');
            if (key == "alpha") alpha = alpha_spec();
            else if (key == "beta") beta = beta_spec();
            else if (key == "r") r = number();
            else fail("unknown karamata key '" + key + "'");
            if (!eat(',')) break;
        }
        if (!alpha || !beta || !r) fail("karamata needs alpha=, beta= and r=");
        return karamata(*alpha, *beta, *r);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

ParamFn parse_param_fn(const std::string& text) { return Parser(text).parse(); }

} // namespace hilbint::param
