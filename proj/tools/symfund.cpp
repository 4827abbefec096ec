#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <symfund.hpp>
#include <symfund/oracle.hpp>

namespace {

using namespace symfund;
using json = nlohmann::json;

constexpr int exit_usage = 2;
constexpr int exit_verify = 3;

enum class Format { text, json, latex };

struct Globals {
    std::string format = "text";
    std::string cache;
    bool verify = false;
    bool no_prune = false;
    unsigned threads = 1;

    Format fmt() const
    {
        if (format == "json")
            return Format::json;
        if (format == "latex")
            return Format::latex;
        return Format::text;
    }
};

class VerificationFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<Partition, Partition> parse_pair(const std::vector<std::string>& args)
{
    std::string joined;
    for (const auto& a : args)
        joined += a + " ";
    const auto slash = joined.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("expected two partitions separated by '/', e.g. 2,1 / 1");
    return {io::parse_partition(joined.substr(0, slash)), io::parse_partition(joined.substr(slash + 1))};
}

std::optional<cache::ResultCache> open_cache(const Globals& g)
{
    if (g.cache == "none")
        return std::nullopt;
    auto path = g.cache.empty() ? cache::default_path() : std::filesystem::path(g.cache);
    if (path.empty())
        return std::nullopt;
    cache::ResultCache c(path);
    for (const auto& w : c.warnings())
        std::cerr << w << '\n';
    return c;
}

std::string render(const SchurVector& f, Format fmt)
{
    switch (fmt) {
    case Format::json:
        return io::to_json(f).dump();
    case Format::latex:
        return io::to_latex(f);
    default:
        return io::to_text(f);
    }
}

std::string render(const SLabeledVector& F, Format fmt)
{
    switch (fmt) {
    case Format::json:
        return io::to_json(F).dump();
    case Format::latex:
        return io::to_latex(F);
    default:
        return io::to_text(F);
    }
}

std::string render(const Rational& q, Format fmt)
{
    switch (fmt) {
    case Format::json:
        return io::rational_json(q).dump();
    case Format::latex:
        return io::detail::latex_rational(q);
    default:
        return q.get_str();
    }
}

// Looks up or computes a plethysm/product expansion, optionally checking it
// against the brute-force oracle.
SchurVector cached_expansion(const Globals& g, cache::Kind kind, const Partition& a, const Partition& b,
                             bool& verified)
{
    auto store = open_cache(g);
    auto compute = [&] {
        if (kind == cache::Kind::product)
            return lr_product_recursive(a, b);
        return plethysm(a, b, {.prune = !g.no_prune, .threads = g.threads});
    };

    std::optional<SchurVector> result;
    if (store && !g.no_prune)
        result = store->lookup(kind, a, b);
    const bool hit = result.has_value();
    if (!hit)
        result = compute();
    if (g.verify) {
        if (hit && compute() != *result)
            throw VerificationFailure("cached record disagrees with recomputation");
        const SchurVector expected = kind == cache::Kind::product ? oracle::product_schur(a, b)
                                                                 : oracle::plethysm_schur(a, b);
        if (expected != *result)
            throw VerificationFailure("oracle disagrees: oracle gives " + io::to_text(expected));
        verified = true;
    }
    if (store && !hit) {
        store->store(kind, a, b, *result);
        for (const auto& w : store->warnings())
            std::cerr << w << '\n';
    }
    return *result;
}

void print_expansion(const SchurVector& f, const Globals& g, bool verified)
{
    if (g.fmt() == Format::json) {
        json j = io::to_json(f);
        if (g.verify)
            j["verified"] = verified;
        std::cout << j.dump() << '\n';
        return;
    }
    std::cout << render(f, g.fmt()) << '\n';
    if (g.verify)
        std::cout << (g.fmt() == Format::latex ? "% " : "") << "oracle: agree\n";
}

void cmd_derive(const Globals& g, const std::string& expr, bool labeled)
{
    const SchurVector f = io::parse_expression(expr);
    if (labeled)
        std::cout << render(d_s(f), g.fmt()) << '\n';
    else
        std::cout << render(derive(f), g.fmt()) << '\n';
}

void cmd_pair(const Globals& g, cache::Kind kind, const std::vector<std::string>& args)
{
    auto [a, b] = parse_pair(args);
    bool verified = false;
    const SchurVector f = cached_expansion(g, kind, a, b, verified);
    print_expansion(f, g, verified);
}

void cmd_char(const Globals& g, const std::vector<std::string>& args)
{
    std::string joined;
    for (const auto& s : args)
        joined += s + " ";
    std::vector<std::pair<Partition, Integer>> row;
    Partition a;
    if (joined.find('/') != std::string::npos) {
        auto [alpha, lambda] = parse_pair(args);
        a = alpha;
        const Integer v = character(alpha, lambda);
        switch (g.fmt()) {
        case Format::json:
            std::cout << json{{"alpha", alpha.vector()}, {"cycle_type", lambda.vector()}, {"value", v.get_str()}}.dump()
                      << '\n';
            break;
        default:
            std::cout << v.get_str() << '\n';
        }
        return;
    }
    a = io::parse_partition(joined);
    for (const auto& l : partitions_of(a.size()))
        row.emplace_back(l, character(a, l));
    switch (g.fmt()) {
    case Format::json: {
        json values = json::array();
        for (const auto& [l, v] : row)
            values.push_back({{"cycle_type", l.vector()}, {"value", v.get_str()}});
        std::cout << json{{"alpha", a.vector()}, {"row", values}}.dump() << '\n';
        break;
    }
    case Format::latex:
        for (const auto& [l, v] : row)
            std::cout << "\\chi^{" << io::format_partition(a) << "}_{" << io::format_partition(l)
                      << "} = " << v.get_str() << " \\\\\n";
        break;
    default:
        for (const auto& [l, v] : row)
            std::cout << io::format_partition(l) << ": " << v.get_str() << '\n';
    }
}

void cmd_shadow(const Globals& g, const std::string& alpha, int m, std::optional<int> r)
{
    const Partition a = io::parse_partition(alpha);
    if (m < 0)
        throw std::invalid_argument("--m must be nonnegative");
    const RankPolynomial p = chern_shadow(a, m);
    if (r) {
        const Rational v = p(Rational(*r));
        if (g.fmt() == Format::json)
            std::cout << json{{"alpha", a.vector()}, {"m", m}, {"r", *r}, {"value", io::rational_json(v)}}.dump()
                      << '\n';
        else
            std::cout << render(v, g.fmt()) << '\n';
        return;
    }
    switch (g.fmt()) {
    case Format::json: {
        json coeffs = json::array();
        for (const auto& c : p.coefficients())
            coeffs.push_back(io::rational_json(c));
        std::cout << json{{"alpha", a.vector()}, {"m", m}, {"polynomial", to_string(p)}, {"coefficients", coeffs}}.dump()
                  << '\n';
        break;
    }
    case Format::latex:
        std::cout << io::to_latex(p) << '\n';
        break;
    default:
        std::cout << p << '\n';
    }
}

void cmd_bound(const Globals& g, const std::vector<std::string>& args)
{
    auto [a, b] = parse_pair(args);
    const SupportBound bd = support_bound(a, b);
    switch (g.fmt()) {
    case Format::json:
        std::cout << json{{"max_columns", bd.max_columns}, {"max_rows", bd.max_rows}}.dump() << '\n';
        break;
    case Format::latex:
        std::cout << "\\gamma_1 \\le " << bd.max_columns << ", \\ell(\\gamma) \\le " << bd.max_rows << '\n';
        break;
    default:
        std::cout << "columns <= " << bd.max_columns << "\nrows <= " << bd.max_rows << '\n';
    }
}

void cmd_decompose(const Globals& g, const std::string& expr, int t, bool rows)
{
    const SchurVector f = io::parse_expression(expr);
    const auto [part, m] = decompose_support(f, t, rows ? Axis::rows : Axis::columns);
    switch (g.fmt()) {
    case Format::json:
        std::cout << json{{"g", io::to_json(part)}, {"m", io::rational_json(m)}}.dump() << '\n';
        break;
    default:
        std::cout << "g = " << render(part, g.fmt()) << "\nm = " << render(m, g.fmt()) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with symmetric functions: derivation, products, plethysms, Chern shadows."};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--cache", g.cache, "Cache file path, or 'none' (default: $SYMFUND_CACHE)");
    app.add_flag("--verify", g.verify, "Check results against the brute-force oracle");
    app.add_flag("--no-prune", g.no_prune, "Do not restrict plethysm candidates to the support bound");
    app.add_option("--threads", g.threads, "Worker threads for coefficient extraction")->check(CLI::Range(1u, 256u));

    std::string expr;
    bool labeled = false;
    auto* derive_cmd = app.add_subcommand("derive", "Apply D, or D_s with --s, to an expression");
    derive_cmd->add_option("expr", expr, "Expression over s[...], p[...] and rationals")->required();
    derive_cmd->add_flag("--s", labeled, "Apply the labeled derivation D_s");

    std::vector<std::string> pair_args;
    auto* product_cmd = app.add_subcommand("product", "Schur product s_a s_b: product A / B");
    product_cmd->add_option("args", pair_args)->required();
    auto* plethysm_cmd = app.add_subcommand("plethysm", "Plethysm s_a[s_b]: plethysm A / B");
    plethysm_cmd->add_option("args", pair_args)->required();
    auto* bound_cmd = app.add_subcommand("bound", "Support bound for s_a[s_b]: bound A / B");
    bound_cmd->add_option("args", pair_args)->required();
    auto* char_cmd = app.add_subcommand("char", "Character value: char A / L, or a table row: char A");
    char_cmd->add_option("args", pair_args)->required();

    std::string shadow_alpha;
    int m = 0;
    std::optional<int> r;
    auto* shadow_cmd = app.add_subcommand("shadow", "Chern shadow Sh_m(S^a E)");
    shadow_cmd->add_option("alpha", shadow_alpha)->required();
    shadow_cmd->add_option("--m", m, "Shadow index m");
    shadow_cmd->add_option("--r", r, "Evaluate at this rank instead of printing a polynomial in r");

    int t = 0;
    bool rows = false;
    auto* decompose_cmd = app.add_subcommand("decompose", "Write f = g + m p_d with g supported on t columns");
    decompose_cmd->add_option("expr", expr)->required();
    decompose_cmd->add_option("--t", t, "Support width")->required();
    decompose_cmd->add_flag("--rows", rows, "Use rows instead of columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*derive_cmd)
            cmd_derive(g, expr, labeled);
        else if (*product_cmd)
            cmd_pair(g, cache::Kind::product, pair_args);
        else if (*plethysm_cmd)
            cmd_pair(g, cache::Kind::plethysm, pair_args);
        else if (*bound_cmd)
            cmd_bound(g, pair_args);
        else if (*char_cmd)
            cmd_char(g, pair_args);
        else if (*shadow_cmd)
            cmd_shadow(g, shadow_alpha, m, r);
        else if (*decompose_cmd)
            cmd_decompose(g, expr, t, rows);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return exit_verify;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return exit_verify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return 0;
}
