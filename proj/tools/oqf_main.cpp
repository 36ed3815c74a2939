#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "oqf/catalog.hpp"
#include "oqf/checks.hpp"
#include "oqf/io.hpp"
#include "oqf/search.hpp"

using namespace oqf;

namespace {

struct CommonFlags {
    int cap = 8;
    uint64_t seed = 1;
    bool json = false;
    bool witnesses = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--cap", f.cap, "exhaustive-enumeration size cap")->capture_default_str();
    cmd->add_option("--seed", f.seed, "seed for sampled checks")->capture_default_str();
    cmd->add_flag("--json", f.json, "machine-readable report");
    cmd->add_flag("--witnesses", f.witnesses, "print witnesses for passing checks too");
}

CheckOptions make_options(const CommonFlags& f) {
    CheckOptions opt;
    opt.caps.enum_cap = f.cap;
    opt.caps.seed = f.seed;
    opt.witnesses = f.witnesses;
    return opt;
}

int finish(const Report& rep, const CommonFlags& f) {
    if (f.json) std::cout << rep.to_json() << "\n";
    else rep.render(std::cout, f.witnesses);
    return rep.exit_code();
}

FrameWitness named_frame(const std::string& name) {
    if (name == "powerset1") return catalog::powerset_frame({"a"});
    if (name == "powerset2") return catalog::powerset_frame({"a", "b"});
    if (name.rfind("chain", 0) == 0) {
        int len = std::stoi(name.substr(5));
        return catalog::chain_frame(len);
    }
    // otherwise treat as a file
    auto sf = load_structure(name);
    if (sf.kind == StructureFile::Kind::Frame) return *sf.frame;
    if (sf.kind == StructureFile::Kind::Quantale) return sf.quantale->frame();
    throw structure_error("search needs a frame (builtin powerset1|powerset2|chain<n> or a file)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model checker for quantales, groupoids and their bisections"};
    app.require_subcommand(1);

    std::string path, pattern, to, out_path;
    CommonFlags flags;
    bool roundtrip = false;

    auto* check = app.add_subcommand("check", "run the full applicable check suite on a file");
    check->add_option("file", path)->required();
    check->add_flag("--roundtrip", roundtrip, "also run the construction roundtrips");
    add_common(check, flags);

    auto* rt = app.add_subcommand("roundtrip", "construction roundtrip for a quantale or groupoid");
    rt->add_option("file", path)->required();
    add_common(rt, flags);

    auto* bis = app.add_subcommand("bisections", "bisection semigroup of a quantale or groupoid");
    bis->add_option("file", path)->required();
    add_common(bis, flags);

    auto* cover = app.add_subcommand("cover", "completion, embeddability and the etale cover");
    cover->add_option("file", path)->required();
    add_common(cover, flags);

    auto* search = app.add_subcommand("search", "enumerate quantale structures matching a pattern");
    search->add_option("--frame", path, "builtin frame name or file")->required();
    search->add_option("--pattern", pattern, "e.g. \"B & O & U & !R\"")->required();
    add_common(search, flags);

    auto* convert = app.add_subcommand("convert", "run a construction and emit the result");
    convert->add_option("file", path)->required();
    convert->add_option("--to", to, "quantale | groupoid | completion")->required();
    convert->add_option("--out", out_path, "output file (default stdout)");
    add_common(convert, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        CheckOptions opt = make_options(flags);

        if (check->parsed()) {
            auto sf = load_structure(path);
            opt.roundtrip = roundtrip;
            return finish(run_check(sf, opt), flags);
        }
        if (rt->parsed()) {
            auto sf = load_structure(path);
            opt.roundtrip = true;
            Report rep;
            if (sf.kind == StructureFile::Kind::Groupoid) rep = groupoid_suite(*sf.groupoid, opt);
            else if (sf.kind == StructureFile::Kind::Quantale)
                rep = quantale_suite(*sf.quantale, {}, opt);
            else throw structure_error("roundtrip needs a quantale or groupoid file");
            return finish(rep, flags);
        }
        if (bis->parsed()) {
            auto sf = load_structure(path);
            Quantale q = sf.kind == StructureFile::Kind::Groupoid ? quantale_of(*sf.groupoid)
                         : sf.kind == StructureFile::Kind::Quantale
                             ? *sf.quantale
                             : throw structure_error("bisections needs a quantale or groupoid");
            auto c = classify(q);
            if (!c.is_open()) throw precondition_error("bisections are defined for open quantal frames");
            Report rep;
            rep.subject = cat("bisections of ", path);
            auto wm = weak_multiplicativity_check(q, c, opt.caps.bis_cap);
            rep.items.push_back({"bisection-count", Verdict::Pass,
                                 cat(wm.bisections.size(), " local bisections"), false});
            rep.add("weakly-multiplicative", wm.holds, wm.witness);
            if (wm.holds && !flags.json) {
                const auto& sg = *wm.semigroup;
                std::cout << "product table (rows * columns):\n";
                for (size_t i = 0; i < sg.elems.size(); ++i) {
                    for (size_t j = 0; j < sg.elems.size(); ++j)
                        std::cout << sg.mult[i * sg.elems.size() + j] << " ";
                    std::cout << "\n";
                }
                for (size_t i = 0; i < sg.elems.size(); ++i)
                    std::cout << "  " << i << ": domain " << q.name(sg.elems[i].u) << ", codomain "
                              << q.name(sg.elems[i].v) << "\n";
            }
            return finish(rep, flags);
        }
        if (cover->parsed()) {
            auto sf = load_structure(path);
            Report rep;
            rep.subject = cat("cover of ", path);
            if (sf.kind == StructureFile::Kind::Groupoid) {
                auto cf = cover_functor_check(*sf.groupoid, opt.caps);
                if (!cf.applicable) rep.not_applicable("cover-functor", cf.gate_reason);
                else {
                    rep.add("cover-functor", cf.functor_ok, cf.witness, true);
                    rep.add("cover-frame-equation", cf.frame_equation_ok, cf.witness, true);
                    rep.add("cover-epi", cf.surjective, "", true);
                    rep.add("cover-iso-iff-etale", cf.iso == cf.etale,
                            cat("iso=", cf.iso, " etale=", cf.etale), true);
                }
                return finish(rep, flags);
            }
            if (sf.kind != StructureFile::Kind::Quantale)
                throw structure_error("cover needs a quantale or groupoid file");
            Quantale& q = *sf.quantale;
            auto c = classify(q);
            Report audit = law_audit(q, c, opt.caps);
            if (!c.weakly_multiplicative.value_or(false)) {
                rep.not_applicable("cover", "not weakly multiplicative at this size");
                return finish(rep, flags);
            }
            auto cd = build_cover(q, c, opt.caps);
            rep.items.push_back({"completion-size", Verdict::Pass,
                                 cat(cd.qhat.size(), " elements"), false});
            rep.add("cover-data-valid", cd.valid(), cd.validation_failure, true);
            auto eb = enough_bisections_check(q, cd);
            rep.add("enough-bisections", eb.enough,
                    eb.enough ? ""
                              : cat("j identifies ", q.name(eb.witness.first), " with ",
                                    q.name(eb.witness.second)));
            auto we = weak_embeddability_check(q, cd);
            rep.add("weakly-embeddable", we.weakly_embeddable, we.witness);
            auto er = embeddability_check(q, c, cd, opt.caps);
            if (er.applicable) rep.add("embeddable", er.embeddable, cat("mode ", er.mode));
            else rep.not_applicable("embeddable", "not weakly embeddable");
            return finish(rep, flags);
        }
        if (search->parsed()) {
            SearchOptions sopt;
            sopt.caps = opt.caps;
            auto fw = named_frame(path);
            auto outcome = search_quantales(fw, pattern, sopt);
            return finish(outcome.report, flags);
        }
        if (convert->parsed()) {
            auto sf = load_structure(path);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw structure_error(cat("cannot write ", out_path));
                os = &file;
            }
            if (to == "quantale") {
                if (sf.kind == StructureFile::Kind::Groupoid)
                    emit_quantale(*os, quantale_of(*sf.groupoid), sf.title + " quantale");
                else if (sf.kind == StructureFile::Kind::InverseSemigroup)
                    emit_quantale(*os, join_completion(*sf.semigroup).quantale,
                                  sf.title + " completion");
                else throw structure_error("convert --to quantale needs a groupoid or semigroup");
            } else if (to == "groupoid") {
                if (sf.kind != StructureFile::Kind::Quantale)
                    throw structure_error("convert --to groupoid needs a quantale");
                auto c = classify(*sf.quantale);
                law_audit(*sf.quantale, c, opt.caps);
                emit_groupoid(*os, groupoid_of(*sf.quantale, c), sf.title + " groupoid");
            } else if (to == "completion") {
                if (sf.kind != StructureFile::Kind::Quantale)
                    throw structure_error("convert --to completion needs a quantale");
                auto c = classify(*sf.quantale);
                law_audit(*sf.quantale, c, opt.caps);
                auto cd = build_cover(*sf.quantale, c, opt.caps);
                emit_quantale(*os, cd.qhat, sf.title + " bisection completion");
            } else {
                throw structure_error(cat("unknown conversion target ", to));
            }
            return 0;
        }
    } catch (const structure_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 3;
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
