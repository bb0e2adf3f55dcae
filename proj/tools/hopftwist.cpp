#include "hopf/gallery.hpp"
#include "hopf/io.hpp"
#include "hopf/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

constexpr const char* kVersion = "hopftwist 1.0.0";

struct RunContext {
    std::string command;
    std::string reportMode = "text"; // text | json
    std::string outPath;             // empty: stdout
    uint64_t seed = 12345;
};

int emitReport(const RunContext& rc, const hopf::Report& rep) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!rc.outPath.empty()) {
        file.open(rc.outPath);
        if (!file) {
            std::cerr << "cannot open output file: " << rc.outPath << "\n";
            return 2;
        }
        os = &file;
    }
    if (rc.reportMode == "json") {
        hopf::io::Json j;
        j["tool"] = "hopftwist";
        j["version"] = kVersion;
        j["command"] = rc.command;
        j["seed"] = rc.seed;
        hopf::io::Json checks = hopf::io::Json::array();
        for (const auto& c : rep.checks) {
            hopf::io::Json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            e["witness"] = c.witness;
            e["seconds"] = std::round(c.seconds * 1000.0) / 1000.0;
            checks.push_back(std::move(e));
        }
        j["checks"] = std::move(checks);
        j["pass"] = rep.ok();
        *os << j.dump(1) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            *os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.witness.empty()) *os << "  [" << c.witness << "]";
            if (c.seconds >= 0.01) *os << "  (" << std::fixed << std::setprecision(2) << c.seconds
                                       << "s)" << std::defaultfloat;
            *os << "\n";
        }
        *os << (rep.ok() ? "OK" : "FAILED") << "  " << rep.checks.size() << " checks\n";
    }
    return rep.ok() ? 0 : 1;
}

hopf::Cyc parseScalarArg(const std::string& s, long fieldOrder) {
    return hopf::io::decodeScalar(s, fieldOrder);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction, verification and cocycle deformation of "
                 "finite-dimensional Hopf algebras over cyclotomic fields"};
    app.set_version_flag("--version", kVersion);

    RunContext rc;
    for (int i = 0; i < argc; ++i) {
        if (i) rc.command += " ";
        rc.command += argv[i];
    }

    int jobs = 0;
    app.fallthrough(); // global flags may follow the subcommand
    app.add_option("--report", rc.reportMode, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", rc.outPath, "write the report to a file instead of stdout");
    app.add_option("--jobs", jobs, "parallel verification fan-out (default: all cores)");
    app.add_option("--seed", rc.seed, "seed for the randomized property checks");
    app.require_subcommand(1);

    // validate
    auto* cmdValidate = app.add_subcommand("validate", "check the axioms of a presentation file");
    std::string validateFile, levelName = "bialgebra";
    cmdValidate->add_option("file", validateFile)->required();
    cmdValidate->add_option("--level", levelName, "coalgebra | algebra | bialgebra | hopf")
        ->check(CLI::IsMember({"coalgebra", "algebra", "bialgebra", "hopf"}));

    // verify-cocycle
    auto* cmdVerify = app.add_subcommand("verify-cocycle", "certify a 2-cocycle against an algebra");
    std::string vAlg, vCoc, vHopfSub;
    cmdVerify->add_option("algebra", vAlg)->required();
    cmdVerify->add_option("cocycle", vCoc)->required();
    cmdVerify->add_option("--hopf-sub", vHopfSub,
                          "splitting file with H, pi, sigma: adds H-bilinearity checks and "
                          "enables inversion through the coinvariant side");

    // twist
    auto* cmdTwist = app.add_subcommand("twist", "deform an algebra by a certified 2-cocycle");
    std::string tAlg, tCoc, tOut, tSplit;
    cmdTwist->add_option("algebra", tAlg)->required();
    cmdTwist->add_option("cocycle", tCoc)->required();
    cmdTwist->add_option("-o,--output", tOut)->required();
    cmdTwist->add_option("--split", tSplit, "splitting file used to invert the cocycle");

    // extract
    auto* cmdExtract = app.add_subcommand("extract", "pre-bialgebra of coinvariants of a splitting datum");
    std::string eAlg, ePi, eOut;
    cmdExtract->add_option("algebra", eAlg)->required();
    cmdExtract->add_option("--pi", ePi, "splitting file with H, pi, sigma")->required();
    cmdExtract->add_option("-o,--output", eOut)->required();

    // trichotomy
    auto* cmdTri = app.add_subcommand("trichotomy", "associativity trichotomy of a pre-bialgebra file");
    std::string triFile;
    cmdTri->add_option("file", triFile)->required();

    // suite
    auto* cmdSuite = app.add_subcommand("suite", "run a built-in verification suite");
    std::string suiteName, dumpDir;
    std::string sa1 = "1", sa2 = "1", sa = "1";
    cmdSuite->add_option("name", suiteName)
        ->required()
        ->check(CLI::IsMember({"q-identities", "dim81", "dim32-f1", "dim32-f2", "dim32-f3", "qlp-demo"}));
    cmdSuite->add_option("--a1", sa1, "scalar a1 (power-basis rational string)");
    cmdSuite->add_option("--a2", sa2, "scalar a2");
    cmdSuite->add_option("--a", sa, "scalar a");
    cmdSuite->add_option("--dump", dumpDir, "dump the suite's presentations and cocycles here");

    CLI11_PARSE(app, argc, argv);
    hopf::setParallelJobs(jobs);

    try {
        hopf::Report rep;
        if (cmdValidate->parsed()) {
            auto p = hopf::io::decodePresentation(hopf::io::readJsonFile(validateFile));
            rep = validateStructure(*p, hopf::parseLevel(levelName));
        } else if (cmdVerify->parsed()) {
            auto a = hopf::io::decodePresentation(hopf::io::readJsonFile(vAlg));
            hopf::BilForm gamma = hopf::io::decodeBilForm(hopf::io::readJsonFile(vCoc), a->dim());
            if (!vHopfSub.empty()) {
                auto datum = hopf::io::decodeSplitting(hopf::io::readJsonFile(vHopfSub), a);
                rep.merge(hopf::validateSplittingDatum(datum), "datum: ");
                if (rep.ok()) {
                    auto inv = hopf::invertBilFormViaDatum(datum, gamma);
                    if (!inv) {
                        rep.add("convolution invertible", false, "no inverse found through the datum");
                    } else {
                        hopf::HSubContext hsub{datum.H, datum.sigma};
                        auto cert = hopf::isTwoCocycleWithInverse(a, gamma, *inv, &hsub);
                        rep.merge(cert.checks, "");
                    }
                }
            } else {
                auto cert = hopf::isTwoCocycle(a, gamma, nullptr, nullptr);
                rep.merge(cert.checks, "");
            }
        } else if (cmdTwist->parsed()) {
            auto a = hopf::io::decodePresentation(hopf::io::readJsonFile(tAlg));
            hopf::BilForm gamma = hopf::io::decodeBilForm(hopf::io::readJsonFile(tCoc), a->dim());
            std::optional<hopf::BilForm> inv;
            if (!tSplit.empty()) {
                auto datum = hopf::io::decodeSplitting(hopf::io::readJsonFile(tSplit), a);
                inv = hopf::invertBilFormViaDatum(datum, gamma);
            } else {
                inv = hopf::invertBilForm(*a, gamma, nullptr);
            }
            if (!inv) {
                rep.add("convolution invertible", false,
                        tSplit.empty() ? "no inverse found; pass --split for large algebras"
                                       : "no inverse found through the datum");
            } else {
                auto cert = hopf::isTwoCocycleWithInverse(a, gamma, *inv, nullptr);
                rep.merge(cert.checks, "");
                if (cert.ok()) {
                    auto twisted = hopf::twistBialgebra(*a, cert);
                    twisted->name = a->name + "^gamma";
                    rep.merge(hopf::validateStructure(*twisted, hopf::Level::Bialgebra), "twist: ");
                    hopf::io::writeJsonFile(tOut, hopf::io::encodePresentation(*twisted));
                }
            }
        } else if (cmdExtract->parsed()) {
            auto a = hopf::io::decodePresentation(hopf::io::readJsonFile(eAlg));
            auto datum = hopf::io::decodeSplitting(hopf::io::readJsonFile(ePi), a);
            rep.merge(hopf::validateSplittingDatum(datum), "datum: ");
            if (rep.ok()) {
                hopf::Extraction ex = hopf::extractPreBialgebra(datum);
                rep.merge(hopf::validatePreBialgebra(ex.P), "extracted: ");
                hopf::io::writeJsonFile(eOut, hopf::io::encodePreBialgebra(ex.P));
            }
        } else if (cmdTri->parsed()) {
            hopf::PreBialgebra p = hopf::io::decodePreBialgebra(hopf::io::readJsonFile(triFile));
            rep = hopf::associativityTrichotomy(p);
        } else if (cmdSuite->parsed()) {
            if (suiteName == "q-identities") {
                rep = hopf::suiteQIdentities();
            } else {
                long fieldOrder = suiteName == "dim81" || suiteName == "qlp-demo" ? 9
                                  : suiteName == "dim32-f3"                       ? 4
                                                                                  : 8;
                hopf::SuiteOptions opts;
                opts.a1 = parseScalarArg(sa1, fieldOrder);
                opts.a2 = parseScalarArg(sa2, fieldOrder);
                opts.a = parseScalarArg(sa, fieldOrder);
                opts.seed = rc.seed;
                opts.dumpDir = dumpDir;
                if (suiteName == "dim81") rep = hopf::suiteDim81(opts);
                else if (suiteName == "dim32-f1") rep = hopf::suiteDim32(1, opts);
                else if (suiteName == "dim32-f2") rep = hopf::suiteDim32(2, opts);
                else if (suiteName == "dim32-f3") rep = hopf::suiteDim32(3, opts);
                else rep = hopf::suiteQlpDemo(opts);
            }
        }
        return emitReport(rc, rep);
    } catch (const hopf::io::CodecError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
