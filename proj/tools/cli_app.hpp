#ifndef SKEWDD_CLI_APP_HPP
#define SKEWDD_CLI_APP_HPP

#include <skewdd/fk_algebra.hpp>
#include <skewdd/fk_canonical.hpp>
#include <skewdd/permutation.hpp>
#include <skewdd/polynomial.hpp>
#include <skewdd/skew.hpp>
#include <skewdd/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <optional>
#include <string>
#include <vector>

namespace skewdd::cli {

enum ExitCode { ok = 0, domain_failure = 1, parse_failure = 2 };

struct PermInput {
    Permutation perm;
    std::optional<SimpleWord> word; // set when given in word syntax
};

/// "3412" is one-line notation when it is a permutation of 1..n; anything with a comma,
/// a single letter, or the empty string is a simple word.
inline PermInput parse_permutation(const std::string& text, int n, bool allow_nonreduced) {
    const bool one_line = text.find(',') == std::string::npos && static_cast<int>(text.size()) == n && n > 1;
    if (one_line) {
        const Permutation p = parse_one_line(text);
        return {p, std::nullopt};
    }
    const SimpleWord word = text == "e" ? SimpleWord{} : parse_word(text);
    std::size_t pos = 0;
    for (int a : word) {
        if (a < 1 || a >= n)
            throw ParseError("letter " + std::to_string(a) + " outside 1.." + std::to_string(n - 1), pos);
        pos += std::to_string(a).size() + 1;
    }
    if (!is_reduced(word, n) && !allow_nonreduced)
        throw ParseError("word " + text + " is not reduced (use --allow-nonreduced)", 0);
    return {from_word(word, n), word};
}

inline PermInput read_permutation(const std::string& text, int n, bool allow_nonreduced) {
    try {
        return parse_permutation(text, n, allow_nonreduced);
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " in '" + text + "'", 0);
    }
}

class App {
public:
    App(std::ostream& out, std::ostream& err) : out_(out), err_(err) { build(); }

    int run(std::vector<std::string> args) {
        std::reverse(args.begin(), args.end());
        try {
            app_.parse(args);
        } catch (const CLI::CallForHelp& e) {
            return app_.exit(e, out_, err_);
        } catch (const CLI::CallForAllHelp& e) {
            return app_.exit(e, out_, err_);
        } catch (const CLI::CallForVersion& e) {
            return app_.exit(e, out_, err_);
        } catch (const CLI::ParseError& e) {
            app_.exit(e, out_, err_);
            return parse_failure;
        }
        try {
            if (format_ != "text" && format_ != "json")
                throw ParseError("unknown format '" + format_ + "'", 0);
            set_canon_limits({limit_n_, max_degree_});
            return dispatch();
        } catch (const ParseError& e) {
            err_ << "parse error: " << e.what() << '\n';
            return parse_failure;
        } catch (const nlohmann::json::exception& e) {
            err_ << "parse error: " << e.what() << '\n';
            return parse_failure;
        } catch (const std::exception& e) {
            err_ << "error: " << e.what() << '\n';
            return domain_failure;
        }
    }

private:
    bool json() const { return format_ == "json"; }

    void build() {
        app_.description("Skew divided differences and the Fomin-Kirillov algebra.");
        app_.option_defaults()->always_capture_default();
        app_.require_subcommand(1);
        app_.fallthrough();
        app_.add_option("--format", format_, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
        app_.add_option("--seed", seed_, "Seed for randomized suites");
        app_.add_option("--max-degree", max_degree_, "Largest degree handled by canonical forms")->check(CLI::Range(0, 12));
        app_.add_option("--limit-n", limit_n_, "Largest window n handled by canonical forms")->check(CLI::Range(1, 5));

        auto* skew = app_.add_subcommand("skew", "Skew element x_{w/v}");
        skew->add_option("--n", n_, "Window n")->required()->check(CLI::Range(1, 9));
        skew->add_option("--w", w_, "w: one-line (3412) or word (2,1,3,2)")->required();
        skew->add_option("--v", v_, "v: one-line or word; empty is the identity");
        skew->add_option("--method", method_, "signed, pairing, explicit or recurrence")
            ->check(CLI::IsMember({"signed", "pairing", "explicit", "recurrence"}));
        skew->add_flag("--allow-nonreduced", allow_nonreduced_, "Accept non-reduced words as group products");
        skew->callback([this] { command_ = "skew"; });

        auto* cuv = app_.add_subcommand("cuv", "Schubert structure constants c_{uv}^w");
        cuv->add_option("--n", n_, "Window n")->required()->check(CLI::Range(1, 9));
        cuv->add_option("--u", u_, "u");
        cuv->add_option("--v", v_, "v");
        cuv->add_option("--w", w_, "w");
        cuv->add_flag("--table", table_, "All triples with l(u) + l(v) = l(w) at window n");
        cuv->add_flag("--allow-nonreduced", allow_nonreduced_, "Accept non-reduced words as group products");
        cuv->callback([this] { command_ = "cuv"; });

        auto* schub = app_.add_subcommand("schubert", "Schubert polynomial S_w");
        schub->add_option("--n", n_, "Window n")->required()->check(CLI::Range(1, 9));
        schub->add_option("--w", w_, "w")->required();
        schub->add_flag("--allow-nonreduced", allow_nonreduced_, "Accept non-reduced words as group products");
        schub->callback([this] { command_ = "schubert"; });

        auto* fk = app_.add_subcommand("fk", "Hopf operations in the free braided model");
        fk->require_subcommand(1);
        auto unary = [&](const std::string& name, const std::string& help) {
            auto* sub = fk->add_subcommand(name, help);
            sub->add_option("element", a_, "Element, e.g. \"x(1,2)x(2,3) - 2*x(1,3)\"")->required();
            sub->callback([this, name] { command_ = "fk " + name; });
            return sub;
        };
        unary("coproduct", "Braided coproduct");
        unary("antipode", "Antipode S");
        unary("sbar", "Reversed antipode S-bar");
        auto* pair = unary("pairing", "Bilinear pairing <A, B>");
        pair->add_option("other", b_, "Second element")->required();
        unary("delta", "Left action Delta_P(A)")->add_option("--by", by_, "P, e.g. x(2,3)")->required();
        unary("nabla", "Right action (A)nabla_P")->add_option("--by", by_, "P, e.g. x(2,3)")->required();

        auto* canon = app_.add_subcommand("canon", "Canonical forms in FK_n");
        canon->add_option("--n", n_, "Window n")->required()->check(CLI::Range(1, 9));
        canon->add_flag("--dim", dim_, "Graded dimensions in degrees 0..max-degree");
        canon->add_option("--equal", equal_, "Decide A = B in FK_n")->expected(2);
        canon->add_option("element", a_, "Element to put in canonical form");
        canon->add_option("--cache", cache_, "JSON file holding elimination data; created when missing");
        canon->callback([this] { command_ = "canon"; });

        auto* verify = app_.add_subcommand("verify", "Run a property suite");
        verify->add_option("--suite", suite_, "leibniz, hopf, positivity, agreement, canon or all")
            ->check(CLI::IsMember({"leibniz", "hopf", "positivity", "agreement", "canon", "all"}));
        verify->add_option("--n", n_, "Window n")->check(CLI::Range(2, 9));
        verify->add_option("--samples", samples_, "Random samples per property")->check(CLI::NonNegativeNumber);
        verify->add_option("--degree", degree_, "Degree bound for random polynomials and words")
            ->check(CLI::Range(0, 12));
        verify->callback([this] { command_ = "verify"; });
    }

    PermInput perm(const std::string& text) const { return read_permutation(text, n_, allow_nonreduced_); }

    void print(const FKElement& a) {
        if (json())
            out_ << to_json(a).dump() << '\n';
        else
            out_ << to_string(a) << '\n';
    }

    void print(const FKTensor& t) {
        if (json())
            out_ << to_json(t).dump() << '\n';
        else
            out_ << to_string(t) << '\n';
    }

    static FKElement element(const std::string& text) { return parse_fk_element(text); }

    int dispatch() {
        if (command_ == "skew")
            return run_skew();
        if (command_ == "cuv")
            return run_cuv();
        if (command_ == "schubert")
            return run_schubert();
        if (command_.rfind("fk ", 0) == 0)
            return run_fk(command_.substr(3));
        if (command_ == "canon")
            return run_canon();
        if (command_ == "verify")
            return run_verify();
        err_ << "no command given\n";
        return parse_failure;
    }

    int run_skew() {
        const PermInput w = perm(w_);
        const PermInput v = perm(v_);
        const SkewMethod method = parse_skew_method(method_);
        FKElement result;
        if (method == SkewMethod::signed_sum && w.word && is_reduced(*w.word, n_))
            result = skew_signed(*w.word, v.perm, n_);
        else
            result = skew(w.perm, v.perm, method);
        print(result);
        return ok;
    }

    int run_cuv() {
        if (table_) {
            const auto perms = all_permutations(n_);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& w : perms)
                for (const auto& u : perms)
                    for (const auto& v : perms) {
                        if (length(u) + length(v) != length(w))
                            continue;
                        const Integer c = structure_constant(u, v, w);
                        if (json())
                            rows.push_back({{"u", to_one_line_string(u)},
                                            {"v", to_one_line_string(v)},
                                            {"w", to_one_line_string(w)},
                                            {"c", detail::coeff_to_json(c)}});
                        else
                            out_ << to_one_line_string(u) << ' ' << to_one_line_string(v) << ' '
                                 << to_one_line_string(w) << ' ' << c << '\n';
                    }
            if (json())
                out_ << rows.dump() << '\n';
            return ok;
        }
        if (u_.empty() || v_.empty() || w_.empty())
            throw ParseError("cuv needs --u, --v and --w, or --table", 0);
        const Integer c = structure_constant(perm(u_).perm, perm(v_).perm, perm(w_).perm);
        if (json())
            out_ << nlohmann::json{{"c", detail::coeff_to_json(c)}}.dump() << '\n';
        else
            out_ << c << '\n';
        return ok;
    }

    int run_schubert() {
        const Polynomial s = schubert(perm(w_).perm);
        if (json())
            out_ << nlohmann::json{{"w", to_one_line_string(perm(w_).perm)}, {"polynomial", to_string(s)}}.dump()
                 << '\n';
        else
            out_ << to_string(s) << '\n';
        return ok;
    }

    int run_fk(const std::string& op) {
        const FKElement a = element(a_);
        if (op == "coproduct") {
            print(coproduct(a));
        } else if (op == "antipode") {
            print(antipode(a));
        } else if (op == "sbar") {
            print(sbar(a));
        } else if (op == "pairing") {
            const Integer c = pairing(a, element(b_));
            if (json())
                out_ << nlohmann::json{{"pairing", detail::coeff_to_json(c)}}.dump() << '\n';
            else
                out_ << c << '\n';
        } else if (op == "delta") {
            print(delta_op(element(by_), a));
        } else if (op == "nabla") {
            print(nabla_op(a, element(by_)));
        }
        return ok;
    }

    void load_cache() {
        if (cache_.empty())
            return;
        if (std::filesystem::exists(cache_)) {
            std::ifstream in(cache_);
            const nlohmann::json j = nlohmann::json::parse(in);
            auto forms = CanonicalForms::from_json(j, canon_limits());
            if (forms->n() != n_)
                throw std::invalid_argument("cache file is for n = " + std::to_string(forms->n()));
            install_canonical_forms(std::move(forms));
        }
    }

    void save_cache() {
        if (cache_.empty() || std::filesystem::exists(cache_))
            return;
        std::ofstream outf(cache_);
        outf << canonical_forms(n_).to_json(max_degree_).dump() << '\n';
    }

    int run_canon() {
        if (n_ > limit_n_)
            throw ResourceLimitError("n = " + std::to_string(n_) + " exceeds --limit-n " + std::to_string(limit_n_));
        load_cache();
        if (dim_) {
            nlohmann::json dims = nlohmann::json::array();
            for (int d = 0; d <= max_degree_; ++d) {
                const std::size_t k = graded_dimension(n_, d);
                if (json())
                    dims.push_back(k);
                else
                    out_ << "dim(" << n_ << ',' << d << ")=" << k << '\n';
            }
            if (json())
                out_ << nlohmann::json{{"n", n_}, {"dimensions", dims}}.dump() << '\n';
        }
        if (!equal_.empty()) {
            const bool same = fk_equal(n_, element(equal_[0]), element(equal_[1]));
            if (json())
                out_ << nlohmann::json{{"equal", same}}.dump() << '\n';
            else
                out_ << (same ? "true" : "false") << '\n';
        }
        if (!a_.empty())
            print(canonical_form(n_, element(a_)));
        save_cache();
        return ok;
    }

    int run_verify() {
        if (n_ > 6)
            throw ResourceLimitError("verify supports n <= 6");
        if (degree_ > max_degree_)
            throw ResourceLimitError("--degree exceeds --max-degree");
        VerifyOptions opt;
        opt.n = n_;
        opt.max_degree = degree_;
        opt.samples = samples_;
        opt.seed = seed_;
        const std::vector<Report> reports = run_suite(suite_, opt);
        bool all_passed = true;
        nlohmann::json j = nlohmann::json::array();
        for (const Report& r : reports) {
            all_passed = all_passed && r.passed();
            if (json()) {
                nlohmann::json props = nlohmann::json::array();
                for (const auto& p : r.properties)
                    props.push_back({{"name", p.name},
                                     {"passed", p.passed()},
                                     {"checked", p.checked},
                                     {"failures", p.failures}});
                j.push_back({{"suite", r.suite}, {"notes", r.notes}, {"properties", props}});
            } else {
                print_report(out_, r);
            }
        }
        if (json())
            out_ << j.dump() << '\n';
        else
            out_ << (all_passed ? "all properties passed" : "some properties FAILED") << '\n';
        return all_passed ? ok : domain_failure;
    }

    std::ostream& out_;
    std::ostream& err_;
    CLI::App app_{"", "skewdd"};

    std::string command_;
    std::string format_ = "text";
    unsigned long long seed_ = 42;
    int max_degree_ = 6;
    int limit_n_ = 4;

    int n_ = 4;
    std::string w_;
    std::string v_;
    std::string u_;
    std::string method_ = "explicit";
    bool allow_nonreduced_ = false;
    bool table_ = false;
    std::string a_;
    std::string b_;
    std::string by_;
    bool dim_ = false;
    std::vector<std::string> equal_;
    std::string cache_;
    std::string suite_ = "all";
    int samples_ = 100;
    int degree_ = 3;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    App app(out, err);
    return app.run(args);
}

} // namespace skewdd::cli

#endif // SKEWDD_CLI_APP_HPP
