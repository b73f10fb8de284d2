/* Acceptance suite: one line per criterion, exit 0 iff everything passes.
 *
 * The three reference quivers are the one-vertex quiver with no arrows
 * ("point", whose representations are plain pointed sets), the A2 quiver
 * with the swap involution, and the one-loop quiver with the identity
 * involution.
 */

#include "f1hall/cli.hpp"
#include "f1hall/context.hpp"
#include "f1hall/hall.hpp"
#include "f1hall/hallmod.hpp"
#include "f1hall/json_io.hpp"
#include "f1hall/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace f1hall;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what)
{
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what
              << "\n";
    if (!ok)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

Context& point_ctx()
{
    static Context ctx(Quiver({"1"}, {}), Involution{{0}, {}}, "point");
    return ctx;
}

Context& a2_ctx()
{
    static Context ctx(Quiver({"1", "2"}, {{"a", 0, 1}}), Involution{{1, 0}, {0}},
                       "a2-swap");
    return ctx;
}

Context& loop_ctx()
{
    static Context ctx(Quiver({"1"}, {{"l", 0, 0}}), Involution{{0}, {0}}, "loop");
    return ctx;
}

Cap cap_of(Context& ctx)
{
    if (&ctx == &point_ctx())
        return Cap{DimVector{4}};
    if (&ctx == &a2_ctx())
        return Cap{DimVector{2, 2}};
    return Cap{DimVector{3}};
}

bool all_pass(const std::vector<CheckReport>& reports, std::string& detail)
{
    bool ok = true;
    for (const auto& r : reports) {
        detail += " " + r.quiver + ":" + std::to_string(r.instances);
        if (!r.pass()) {
            ok = false;
            detail += "(FAILED)";
            for (const auto& f : r.failures) {
                detail += " [" + f.instance + " expected " + f.expected + " got " +
                          f.actual + "]";
                break;  // the minimal witness is first
            }
        }
    }
    return ok;
}

}  // namespace

int main()
{
    // 1. binomial Hall numbers on the point quiver, exact, under a second
    {
        auto t0 = std::chrono::steady_clock::now();
        Context& pt = point_ctx();
        bool ok = true;
        for (int n = 0; n <= 6 && ok; ++n)
            for (int a = 0; a <= n && ok; ++a) {
                auto u = pt.canon(Rep(pt.quiver(), {{a}}, {}));
                auto v = pt.canon(Rep(pt.quiver(), {{n - a}}, {}));
                auto w = pt.canon(Rep(pt.quiver(), {{n}}, {}));
                if (hall_number(pt, u, v, w) != binomial(n, a))
                    ok = false;
            }
        double dt = seconds_since(t0);
        report(1, ok && dt < 1.0,
               "binomial Hall numbers F^[n]_{[a],[n-a]} = C(n,a), n <= 6 ("
               + std::to_string(dt).substr(0, 5) + "s)");
    }

    // 2. the compatibility identity rho(u * xi) = Delta2(u) *_P rho(xi),
    //    exhaustive on all three quivers, under five minutes
    {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        for (Context* c : {&point_ctx(), &a2_ctx(), &loop_ctx()})
            ok = all_pass({verify_yd(*c, cap_of(*c))}, detail) && ok;
        double dt = seconds_since(t0);
        report(2, ok && dt < 300.0, "rho(u*xi) = Delta2(u) *_P rho(xi), instances:" +
                                        detail + " (" + std::to_string(dt).substr(0, 5) +
                                        "s)");
    }

    // 3. bialgebra identity at the same caps
    {
        std::string detail;
        bool ok = true;
        for (Context* c : {&point_ctx(), &a2_ctx(), &loop_ctx()})
            ok = all_pass({verify_bialgebra(*c, cap_of(*c))}, detail) && ok;
        report(3, ok, "Delta(x.y) = Delta(x) (.) Delta(y), instances:" + detail);
    }

    // 4. the worked instance on the point quiver
    {
        Context& pt = point_ctx();
        CanonicalClass zero = pt.zero_class();
        CanonicalClass one = pt.canon(Rep(pt.quiver(), {{1}}, {}));
        IsometryClass triv = pt.trivial_form_class();
        IsometryClass hpt = pt.canon(hyperbolic(pt.quiver(), pt.sigma(),
                                                Rep(pt.quiver(), {{1}}, {})));

        ModuleElement lhs_act =
            act(pt, HallElement::basis(one), ModuleElement::basis(triv));
        bool ok = lhs_act == Rat(2) * ModuleElement::basis(hpt);

        TensorHM rho_h = coact(pt, ModuleElement::basis(hpt));
        TensorHM expect_rho;
        expect_rho.add({zero, hpt}, Rat(1));
        expect_rho.add({one, triv}, Rat(1));
        ok = ok && rho_h == expect_rho;

        TensorHM lhs = coact(pt, lhs_act);
        TensorHM rhs = star_p(pt, coproduct2(pt, HallElement::basis(one)),
                              coact(pt, ModuleElement::basis(triv)));
        TensorHM expect_both;
        expect_both.add({one, triv}, Rat(2));
        expect_both.add({zero, hpt}, Rat(2));
        ok = ok && lhs == expect_both && rhs == expect_both;

        report(4, ok,
               "[pt]*[triv] = 2[H(pt)]; rho([H(pt)]) = [0](x)[H(pt)] + [pt](x)[triv]; "
               "both sides at (pt, triv) equal 2[pt](x)[triv] + 2[0](x)[H(pt)]");
    }

    // 5. duality identities
    {
        std::string detail;
        bool ok = true;
        for (Context* c : {&point_ctx(), &a2_ctx(), &loop_ctx()})
            ok = all_pass({verify_duality(*c, cap_of(*c))}, detail) && ok;
        report(5, ok, "F^W_{U,V} = F^{P(W)}_{P(V),P(U)} and (P (x) id) rho = rho, "
                      "instances:" + detail);
    }

    // 6. graded dimensions: iso classes = rank of primitive monomials
    {
        std::string detail;
        bool ok = true;
        for (Context* c : {&point_ctx(), &a2_ctx(), &loop_ctx()})
            ok = all_pass({verify_mm(*c, cap_of(*c))}, detail) && ok;
        report(6, ok, "per-grade rank of monomials in indecomposables = number of "
                      "classes, instances:" + detail);
    }

    // 7. coinvariant action on a2 at cap (2,2)
    {
        std::string detail;
        CheckReport rep = verify_coinv_action(a2_ctx(), Cap{DimVector{2, 2}});
        bool ok = all_pass({rep}, detail);
        report(7, ok, "u*xi coinvariant iff u in the minus part, a2 cap 2,2, "
                      "zero results logged: " + std::to_string(rep.notes.size()) +
                      ", instances:" + detail);
    }

    // 8. reduction lemmas, exhaustive over total dim X <= 3
    {
        std::string detail;
        bool ok = true;
        for (Context* c : {&point_ctx(), &a2_ctx(), &loop_ctx()})
            ok = all_pass({verify_reduction_lemmas(*c, cap_of(*c))}, detail) && ok;
        report(8, ok, "hyperbolic reduction equivalences and isotropic splitting, "
                      "instances:" + detail);
    }

    // 9. a witness that the module is not a Hopf module, found on the
    //    point quiver within total dimension 3
    {
        CheckReport rep = verify_non_hopf(point_ctx(), Cap{DimVector{3}});
        bool ok = rep.pass() && !rep.notes.empty();
        report(9, ok, ok ? rep.notes[0] : "no witness found");
    }

    // 10. byte-identical reports across two full CLI runs
    {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "f1hall_acceptance";
        fs::create_directories(dir);
        auto write = [&](const char* name, const char* body) {
            std::ofstream out(dir / name);
            out << body;
        };
        write("point.json",
              R"({"name":"point","vertices":["1"],"arrows":[],"involution":{"vertices":{"1":"1"},"arrows":{}}})");
        write("a2.json",
              R"({"name":"a2-swap","vertices":["1","2"],"arrows":[{"name":"a","src":"1","tgt":"2"}],"involution":{"vertices":{"1":"2","2":"1"},"arrows":{"a":"a"}}})");
        write("loop.json",
              R"({"name":"loop","vertices":["1"],"arrows":[{"name":"l","src":"1","tgt":"1"}],"involution":{"vertices":{"1":"1"},"arrows":{"l":"l"}}})");

        struct Run {
            const char* file;
            const char* cap;
        };
        bool ok = true;
        for (const Run& r : {Run{"point.json", "4"}, Run{"a2.json", "2,2"},
                             Run{"loop.json", "3"}}) {
            std::string first, second;
            for (std::string* target : {&first, &second}) {
                std::ostringstream out, err;
                int code = cli_run({"verify", "all", "--quiver", (dir / r.file).string(),
                                    "--cap", r.cap, "--format", "json"},
                                   out, err);
                if (code != 0)
                    ok = false;
                *target = out.str();
            }
            if (first != second || first.empty())
                ok = false;
        }
        report(10, ok, "two consecutive `verify all` runs produce byte-identical "
                       "JSON reports on all three quivers");
    }

    if (failures == 0)
        std::cout << "acceptance: all 10 criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
