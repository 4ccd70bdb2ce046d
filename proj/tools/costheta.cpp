// Command-line front end: exact decisions for cos(t*theta) = c and friends,
// JSON in/out, exit codes 0 (decision completed), 2 (input error),
// 3 (precision cap exceeded).

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "costheta/costheta.hpp"
#include "costheta/json_io.hpp"

namespace costheta::cli {

// --- tiny expression grammar for `minpoly --expr` ---------------------------
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ('^' uint)?
//   primary:= rational | 'i' | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor
class ExprParser {
  public:
    explicit ExprParser(std::string text) : s_(std::move(text)) {}

    AlgebraicNumber parse() {
        AlgebraicNumber v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw input_error("unexpected trailing input in expression");
        return v;
    }

  private:
    AlgebraicNumber expr() {
        AlgebraicNumber v = term();
        for (;;) {
            skip_ws();
            if (eat('+')) v = alg_add(v, term());
            else if (eat('-')) v = alg_sub(v, term());
            else return v;
        }
    }

    AlgebraicNumber term() {
        AlgebraicNumber v = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) v = alg_mul(v, factor());
            else if (eat('/')) v = alg_div(v, factor());
            else return v;
        }
    }

    AlgebraicNumber factor() {
        AlgebraicNumber v = primary();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw input_error("expected integer exponent after '^'");
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            v = alg_pow(v, e);
        }
        return v;
    }

    AlgebraicNumber primary() {
        skip_ws();
        if (eat('-')) return alg_neg(factor());
        if (eat('(')) {
            AlgebraicNumber v = expr();
            expect(')');
            return v;
        }
        if (match_word("sqrt")) {
            skip_ws();
            expect('(');
            AlgebraicNumber v = expr();
            expect(')');
            return alg_sqrt_any(v);
        }
        if (match_word("i")) return alg_i();
        // rational literal: digits, optional /digits handled by '/' operator,
        // so just the integer part here
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw input_error("expected a number, 'i', 'sqrt' or '(' in expression");
        return alg_from_rational(Rat(int_from_string(s_.substr(start, pos_ - start))));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw input_error(std::string("expected '") + c + "' in expression");
    }
    bool match_word(const std::string& w) {
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        size_t end = pos_ + w.size();
        if (end < s_.size() &&
            (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    std::string s_;
    size_t pos_ = 0;
};

AlgebraicNumber parse_algnum_arg(const std::string& text, const char* what) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw input_error(std::string(what) + ": bad JSON: " + err.what());
    }
    return algebraic_from_json(j);
}

NumberField parse_field(const std::string& minpoly_text, const std::string& box_text) {
    Json mj;
    try {
        mj = Json::parse(minpoly_text);
    } catch (const Json::parse_error& err) {
        throw input_error(std::string("field minpoly: bad JSON: ") + err.what());
    }
    RatPoly poly{rat_vector_from_json(mj, "field-minpoly")};
    if (poly.degree() < 1) throw input_error("field minpoly must have degree >= 1");
    RatPoly prim = poly.primitive_integer_form();
    if (!is_irreducible(prim)) throw input_error("field minpoly must be irreducible");
    if (!box_text.empty()) {
        Json wrapped = Json{{"minpoly", mj}, {"box", Json::parse(box_text)}};
        return NumberField(algebraic_from_json(wrapped));
    }
    // Default embedding: the canonically first isolated root.
    auto boxes = isolate_roots(prim, separation_bound(prim) / 4);
    return NumberField(AlgebraicNumber(prim, boxes.front()));
}

FieldElement parse_coords(const NumberField& field, const std::string& text, const char* what) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw input_error(std::string(what) + ": bad JSON: " + err.what());
    }
    std::vector<Rat> v = rat_vector_from_json(j, what);
    if (static_cast<int>(v.size()) != field.degree())
        throw input_error(std::string(what) + ": expected " + std::to_string(field.degree()) +
                          " coordinates");
    return v;
}

Json decision_to_json(const Decision& d) {
    if (d.yes) return Json{{"answer", "yes"}, {"witness", *d.witness}};
    Json j{{"answer", "no"}, {"certificate", certificate_name(*d.certificate)}};
    if (d.scan_bound) j["scanned_through"] = *d.scan_bound;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact decision engine for cos(t*theta) = c over algebraic numbers"};
    app.require_subcommand(1);
    unsigned precision_cap = kDefaultPrecisionCapBits;
    app.add_option("--precision-cap-bits", precision_cap,
                   "hard cap for precision escalation (default 65536)");

    std::string alpha_text, c_text, rcos_text, rsq_text;
    std::string field_minpoly, field_box, base_text, target_text, w_text;
    std::string expr_text, expr_file, coeffs_text, initial_text, value_text;
    unsigned long long t_min = 0, t_at = 0, t_max = 50;
    bool json_flag = false, exp_poly = false;

    auto* cos_cmd = app.add_subcommand("cos-decide", "decide exists t >= t_min: cos(t*theta) = c");
    cos_cmd->add_option("--alpha", alpha_text, "cos(theta) as AlgNum JSON")->required();
    cos_cmd->add_option("--c", c_text, "target c as AlgNum JSON")->required();
    cos_cmd->add_option("--t-min", t_min, "smallest admissible t (default 0)");
    cos_cmd->add_flag("--json", json_flag, "JSON output (always on; accepted for compatibility)");

    auto* rcos_cmd = app.add_subcommand("rcos-decide",
                                        "decide exists t >= t_min: r^t cos(t*theta) = c (r <= 1)");
    rcos_cmd->add_option("--r-cos", rcos_text, "r*cos(theta) as AlgNum JSON")->required();
    rcos_cmd->add_option("--r-sq", rsq_text, "r^2 as AlgNum JSON")->required();
    rcos_cmd->add_option("--c", c_text, "target c as AlgNum JSON")->required();
    rcos_cmd->add_option("--t-min", t_min, "smallest admissible t (default 0)");
    rcos_cmd->add_flag("--json", json_flag, "JSON output (always on)");

    auto* power_cmd = app.add_subcommand("power-solve", "decide exists t >= t_min: z^t = w in Q(z)");
    power_cmd->add_option("--field-minpoly", field_minpoly, "generator minpoly, JSON array")->required();
    power_cmd->add_option("--field-box", field_box, "generator box {x,y,r} (default: first root)");
    power_cmd->add_option("--base", base_text, "base coords (default: the generator z)");
    power_cmd->add_option("--target", target_text, "target coords, JSON array")->required();
    power_cmd->add_option("--t-min", t_min, "smallest admissible t (default 0)");

    auto* member_cmd = app.add_subcommand("membership", "test w in Q(z) and report coordinates");
    member_cmd->add_option("--field-minpoly", field_minpoly, "generator minpoly, JSON array")->required();
    member_cmd->add_option("--field-box", field_box, "generator box {x,y,r} (default: first root)");
    member_cmd->add_option("--w", w_text, "candidate as AlgNum JSON")->required();

    auto* minpoly_cmd = app.add_subcommand("minpoly", "canonical representation of an expression");
    minpoly_cmd->add_option("--expr", expr_text, "e.g. '(3+4*i)/5' or 'sqrt(2)+1'")->required();

    auto* lrs_cmd = app.add_subcommand("lrs", "linear recurrence evaluation and scanning");
    auto* lrs_eval = lrs_cmd->add_subcommand("eval", "exact term at index t (0-based)");
    lrs_eval->add_option("--coeffs", coeffs_text, "recurrence coefficients c_1..c_k")->required();
    lrs_eval->add_option("--initial", initial_text, "seed terms")->required();
    lrs_eval->add_option("--t", t_at, "term index")->required();
    auto* lrs_scan = lrs_cmd->add_subcommand("scan", "all t <= t-max with term = c");
    lrs_scan->add_option("--coeffs", coeffs_text, "recurrence coefficients c_1..c_k")->required();
    lrs_scan->add_option("--initial", initial_text, "seed terms")->required();
    lrs_scan->add_option("--c", value_text, "value to search for, \"p/q\"")->required();
    lrs_scan->add_option("--t-max", t_max, "scan bound (default 50)");
    lrs_cmd->require_subcommand(1);

    auto* cont_cmd = app.add_subcommand("continuize",
                                        "sum-of-squares rewrite to a real-variable instance");
    cont_cmd->add_option("--expr-file", expr_file, "expression JSON file")->required();
    cont_cmd->add_option("--c", c_text, "target constant \"p/q\" (default 0)");
    cont_cmd->add_flag("--exp-poly", exp_poly, "exponential-polynomial form (Skolem shape)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_precision_cap_bits(precision_cap);

    if (cos_cmd->parsed()) {
        CosInstance inst(parse_algnum_arg(alpha_text, "--alpha"), parse_algnum_arg(c_text, "--c"),
                         t_min);
        std::cout << decision_to_json(decide_cos(inst)).dump() << "\n";
        return 0;
    }
    if (rcos_cmd->parsed()) {
        RCosInstance inst(parse_algnum_arg(rcos_text, "--r-cos"),
                          parse_algnum_arg(rsq_text, "--r-sq"), parse_algnum_arg(c_text, "--c"),
                          t_min);
        std::cout << decision_to_json(decide_rcos_contracting(inst)).dump() << "\n";
        return 0;
    }
    if (power_cmd->parsed()) {
        NumberField field = parse_field(field_minpoly, field_box);
        FieldElement base = base_text.empty() ? field.generator_element()
                                              : parse_coords(field, base_text, "--base");
        FieldElement target = parse_coords(field, target_text, "--target");
        Decision d = solve_power(PowerInstance{field, base, target, t_min});
        std::cout << decision_to_json(d).dump() << "\n";
        return 0;
    }
    if (member_cmd->parsed()) {
        NumberField field = parse_field(field_minpoly, field_box);
        AlgebraicNumber w = parse_algnum_arg(w_text, "--w");
        auto coords = membership(field, w);
        Json out = coords ? Json{{"member", true}, {"coords", rat_vector_to_json(*coords)}}
                          : Json{{"member", false}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (minpoly_cmd->parsed()) {
        AlgebraicNumber value = ExprParser(expr_text).parse();
        std::cout << algebraic_to_json(value).dump() << "\n";
        return 0;
    }
    if (lrs_cmd->parsed()) {
        LinearRecurrence rec(rat_vector_from_json(Json::parse(coeffs_text), "--coeffs"),
                             rat_vector_from_json(Json::parse(initial_text), "--initial"));
        if (lrs_eval->parsed()) {
            std::cout << Json{{"t", t_at}, {"value", rat_to_string(term_at(rec, t_at))}}.dump()
                      << "\n";
        } else {
            auto hits = scan_for_value(rec, rat_from_string(value_text), t_max);
            Json arr = Json::array();
            for (auto t : hits) arr.push_back(t);
            std::cout << Json{{"hits", arr}}.dump() << "\n";
        }
        return 0;
    }
    if (cont_cmd->parsed()) {
        std::ifstream in(expr_file);
        if (!in) throw input_error("cannot open expression file: " + expr_file);
        Json j;
        try {
            in >> j;
        } catch (const Json::parse_error& err) {
            throw input_error(std::string("expression file: bad JSON: ") + err.what());
        }
        Rat c = c_text.empty() ? Rat(0) : rat_from_string(c_text);
        Json out;
        if (exp_poly) {
            out = exp_poly_to_json(ep_square_and_rewrite(exp_poly_from_json(j), c));
        } else {
            out = cos_sum_to_json(square_and_rewrite(cos_sum_from_json(j), c));
        }
        out["kind"] = "real-variable instance";
        std::cout << out.dump() << "\n";
        return 0;
    }
    return 2;
}

}  // namespace costheta::cli

int main(int argc, char** argv) {
    try {
        return costheta::cli::run(argc, argv);
    } catch (const costheta::precision_cap_exceeded& e) {
        std::cerr << costheta::Json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const costheta::input_error& e) {
        std::cerr << costheta::Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << costheta::Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << costheta::Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
