#include "CLI11.hpp"

#include "algrest/driver.hpp"
#include "algrest/error.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw algrest::DomainError("input_file", "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    std::string s = os.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Algebraic restrictions of differential forms and the symplectic "
                 "classification of zero-dimensional complete intersections"};
    app.require_subcommand(1);

    bool json_out = false;
    int trunc_cap = 24;
    std::string input_file;
    app.add_flag("--json", json_out, "machine-readable output");
    app.add_option("--trunc-cap", trunc_cap, "jet truncation cap")->capture_default_str();
    app.add_option("--input", input_file,
                   "file holding the expression otherwise passed via --form "
                   "(or --ideal when the command takes no form)");

    std::vector<std::string> vars;
    std::string ideal_text, form_text, family;
    long long a = 0, b = 0;
    int n = 0, p = 2;
    bool closed = false;

    auto add_vars = [&](CLI::App *cmd, bool required) {
        auto *opt = cmd->add_option("--vars", vars, "ordered variable names")
                        ->delimiter(',');
        if (required) opt->required();
    };
    auto add_ideal = [&](CLI::App *cmd, bool required) {
        auto *opt = cmd->add_option("--ideal", ideal_text, "comma-separated generators");
        if (required) opt->required();
    };

    CLI::App *qh = app.add_subcommand("qh-check", "quasi-homogeneity in given coordinates");
    add_vars(qh, true);
    add_ideal(qh, false);

    CLI::App *rb = app.add_subcommand("restrict-basis", "quotient basis and dimension");
    add_vars(rb, true);
    add_ideal(rb, false);
    rb->add_option("--p", p, "form degree")->capture_default_str();
    rb->add_flag("--closed", closed, "closed forms only");

    CLI::App *rd = app.add_subcommand("reduce", "restriction coordinates of a form");
    add_vars(rd, true);
    add_ideal(rd, true);
    rd->add_option("--form", form_text, "differential form");

    CLI::App *pr = app.add_subcommand("primitive", "homotopy primitive with d(alpha) = form");
    add_vars(pr, true);
    add_ideal(pr, true);
    pr->add_option("--form", form_text, "closed form with coefficients in the ideal");

    CLI::App *inv = app.add_subcommand("invariants", "mu, iota, zero restriction, realizability");
    add_vars(inv, false);
    add_ideal(inv, true);
    inv->add_option("--form", form_text, "symplectic form (default: sum dp_i^dq_i)");
    inv->add_option("--n", n, "half-dimension")->required();

    CLI::App *cl = app.add_subcommand("classify", "symplectic class of a catalog ideal");
    add_vars(cl, false);
    add_ideal(cl, true);
    cl->add_option("--form", form_text, "symplectic form (default: sum dp_i^dq_i)");
    cl->add_option("--n", n, "half-dimension")->required();
    cl->add_option("--family", family, "expected family (cross-checked)");

    CLI::App *tb = app.add_subcommand("table", "all classes of a family block");
    tb->add_option("--family", family, "family name")->required();
    tb->add_option("--a", a, "parameter a");
    tb->add_option("--b", b, "parameter b");
    tb->add_option("--n", n, "half-dimension")->required();

    // Let --json / --trunc-cap / --input appear after the subcommand too.
    for (CLI::App *cmd : {qh, rb, rd, pr, inv, cl, tb}) cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!input_file.empty()) {
            std::string content = read_input_file(input_file);
            bool takes_form = !(qh->parsed() || tb->parsed());
            if (takes_form && form_text.empty())
                form_text = content;
            else if (ideal_text.empty())
                ideal_text = content;
        }

        algrest::driver::json doc;
        if (qh->parsed()) {
            doc = algrest::driver::qh_check(vars, ideal_text);
        } else if (rb->parsed()) {
            doc = algrest::driver::restrict_basis(vars, ideal_text, p, closed, trunc_cap);
        } else if (rd->parsed()) {
            doc = algrest::driver::reduce(vars, ideal_text, form_text, trunc_cap);
        } else if (pr->parsed()) {
            doc = algrest::driver::primitive(vars, ideal_text, form_text, trunc_cap);
        } else if (inv->parsed()) {
            doc = algrest::driver::invariants(vars, ideal_text, form_text, n, trunc_cap);
        } else if (cl->parsed()) {
            doc = algrest::driver::classify(family, vars, ideal_text, form_text, n, trunc_cap);
        } else if (tb->parsed()) {
            doc = algrest::driver::table(family, a, b, n, trunc_cap);
        }

        std::cout << (json_out ? algrest::driver::to_json_text(doc)
                               : algrest::driver::to_text(doc));
        return 0;
    } catch (const algrest::DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
