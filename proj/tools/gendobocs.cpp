// Command-line front end: loads an algebra from a JSON file or builds a named
// corpus entry, runs the structural / classification / bocs pipelines and
// emits deterministic text or JSON reports with embedded witnesses.
//
// Exit codes: 0 success (gendo-symmetric / coring exists), 1 negative verdict,
// 2 unparseable input, 3 invariant failure, 4 undecided.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gendobocs/json_io.hpp>

using namespace gendobocs;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kParseFailure = 2;
constexpr int kInvariantFailure = 3;
constexpr int kUndecided = 4;

struct Opts {
  std::string input;
  std::string moduleName;
  std::uint64_t seed = 20240823;
  std::size_t cap = 8;
  bool json = false;
  std::string outPath;
};

/// A path that exists is read as an algebra JSON document; anything else must
/// be a corpus name.
CorpusAlgebra resolveInput(const std::string& input) {
  if (std::filesystem::exists(input)) {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw JsonFormatError("cannot open '" + input + "'");
    const Json doc = Json::parse(in);
    CorpusAlgebra ca;
    ca.name = input;
    ca.algebra = algebraFromJson(doc);
    return ca;
  }
  return corpusAlgebra(input);
}

void emitOutput(const Opts& o, const std::string& text) {
  if (o.outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.outPath, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + o.outPath + "'");
  out << text;
}

std::string renderJson(const Json& j) { return j.dump(2) + "\n"; }

Json preamble(const char* command, const Opts& o) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = o.input;
  j["seed"] = o.seed;
  j["cap"] = o.cap;
  return j;
}

std::string vecText(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << ratToString(v[i]);
  os << "]";
  return os.str();
}

/// Runs the presentation check shared by every algebra-consuming command;
/// emits the failure list and returns false when the input is not an algebra.
bool presentationGate(const CorpusAlgebra& ca) {
  const PresentationReport pres = checkPresentation(ca.algebra);
  if (pres.ok) return true;
  std::cerr << "invariant failure: input is not an associative unital algebra:\n";
  for (const std::string& f : pres.failures) std::cerr << "  " << f << "\n";
  return false;
}

int verdictExit(Verdict v) {
  if (v == Verdict::Yes) return kOk;
  if (v == Verdict::No) return kNegative;
  return kUndecided;
}

int runAnalyze(const Opts& o) {
  const CorpusAlgebra ca = resolveInput(o.input);
  if (!presentationGate(ca)) return kInvariantFailure;
  const Algebra& a = ca.algebra;
  const ModuleCatalog cat = moduleCatalog(ca);
  const std::size_t centerDim = center(a).rows();
  const DomDim dd = dominantDimension(a, o.cap);

  if (o.json) {
    Json j = preamble("analyze", o);
    j["algebra"] = algebraJson(a);
    j["presentation"] = Json{{"ok", true}, {"failures", Json::array()}};
    j["dim"] = a.dim();
    j["radicalDim"] = a.radicalDim();
    j["centerDim"] = centerDim;
    Json entries = Json::array();
    for (const NamedModule& nm : cat.modules) {
      Json e;
      e["name"] = nm.name;
      e["dim"] = nm.module.dim;
      e["projective"] = isProjective(nm.module);
      e["injective"] = isInjective(nm.module);
      entries.push_back(std::move(e));
    }
    j["catalog"] = entries;
    j["catalogComplete"] = cat.complete;
    j["dominantDimension"] = domDimJson(dd);
    emitOutput(o, renderJson(j));
    return kOk;
  }

  std::ostringstream os;
  os << "command: analyze\ninput: " << o.input << "\nseed: " << o.seed << "\n";
  os << "presentation: ok\n";
  os << "dim: " << a.dim() << "\nradical dim: " << a.radicalDim()
     << "\ncenter dim: " << centerDim << "\n";
  std::size_t width = 0;
  for (const NamedModule& nm : cat.modules) width = std::max(width, nm.name.size());
  os << "module catalog (" << (cat.complete ? "complete" : "simples, projectives, injectives")
     << "):\n";
  for (const NamedModule& nm : cat.modules) {
    os << "  " << nm.name << std::string(width - nm.name.size(), ' ') << "  dim "
       << nm.module.dim << "  projective " << (isProjective(nm.module) ? "yes" : "no ")
       << "  injective " << (isInjective(nm.module) ? "yes" : "no") << "\n";
  }
  os << "dominant dimension of the regular module: " << dd.str() << "\n";
  emitOutput(o, os.str());
  return kOk;
}

int runGendo(const Opts& o) {
  const CorpusAlgebra ca = resolveInput(o.input);
  if (!presentationGate(ca)) return kInvariantFailure;
  const GendoReport rep = classify(ca.algebra, o.seed);

  if (o.json) {
    Json j = preamble("gendo", o);
    j["algebra"] = algebraJson(ca.algebra);
    j["report"] = gendoReportJson(rep);
    emitOutput(o, renderJson(j));
    return verdictExit(rep.isGendoSymmetric);
  }

  std::ostringstream os;
  os << "command: gendo\ninput: " << o.input << "\nseed: " << o.seed << "\n";
  os << "gendo-symmetric: " << verdictString(rep.isGendoSymmetric) << "\n";
  os << "morita algebra: " << verdictString(rep.isMorita) << "\n";
  os << "dominant dimension: " << rep.dominantDim.str() << "\n";
  os << "projective-injective classes: " << rep.projectiveInjectiveClasses.size() << "\n";
  if (rep.minimalFaithfulIdempotent)
    os << "minimal faithful idempotent: " << vecText(*rep.minimalFaithfulIdempotent) << "\n";
  else
    os << "minimal faithful idempotent: none\n";
  if (!rep.note.empty()) os << "note: " << rep.note << "\n";
  emitOutput(o, os.str());
  return verdictExit(rep.isGendoSymmetric);
}

int runBocs(const Opts& o) {
  const CorpusAlgebra ca = resolveInput(o.input);
  if (!presentationGate(ca)) return kInvariantFailure;
  const BocsExistence ex = decideBocsExistence(ca.algebra, o.seed);

  Json j = preamble("bocs", o);
  std::ostringstream os;
  os << "command: bocs\ninput: " << o.input << "\nseed: " << o.seed << "\n";
  if (o.json) {
    j["algebra"] = algebraJson(ca.algebra);
    j["exists"] = verdictString(ex.exists);
    j["evidence"] = ex.evidence;
    j["gendo"] = gendoReportJson(ex.report);
  }
  os << "coring on the dual bimodule: " << verdictString(ex.exists) << "\n";
  os << "evidence: " << ex.evidence << "\n";

  if (ex.exists == Verdict::Yes) {
    const Coring& c = *ex.coring;
    const CoringReport axioms = verifyCoringAxioms(c);
    const Vec& e = *ex.report.minimalFaithfulIdempotent;
    const ModuleCatalog cat = moduleCatalog(ca);
    std::vector<RightModule> mods;
    for (const NamedModule& nm : cat.modules) mods.push_back(nm.module);

    // Unit map flags over the catalog.
    struct Flag {
      std::string name;
      std::size_t dim;
      bool injective, bijective;
    };
    std::vector<Flag> flags;
    for (const NamedModule& nm : cat.modules) {
      const UnitMapData u = mapIM(c, nm.module);
      flags.push_back({nm.name, nm.module.dim, u.injective, u.bijective});
    }

    // Greedy partition of the catalog, shipping the linking homs.
    struct ClassInfo {
      std::vector<std::string> members;
      std::size_t repIdx;
      bool zero;
      std::vector<Json> links;
    };
    std::vector<ClassInfo> classes;
    for (std::size_t i = 0; i < cat.modules.size(); ++i) {
      bool placed = false;
      for (ClassInfo& cls : classes) {
        const BocsIsoResult iso =
            bocsIsIsomorphic(c, mods[cls.repIdx], mods[i], o.seed);
        if (iso.verdict == IsoResult::Verdict::Isomorphic) {
          cls.members.push_back(cat.modules[i].name);
          Json link;
          link["forward"] =
              bocsHomJson(cat.modules[cls.repIdx].name, cat.modules[i].name, iso.forward);
          link["backward"] =
              bocsHomJson(cat.modules[i].name, cat.modules[cls.repIdx].name, iso.backward);
          cls.links.push_back(std::move(link));
          placed = true;
          break;
        }
      }
      if (!placed)
        classes.push_back({{cat.modules[i].name}, i, bocsIsZero(c, e, mods[i]), {}});
    }

    const CornerEquivalenceReport corner = eAeEquivalenceCheck(c, e, mods);

    if (o.json) {
      j["coring"] = coringJson(c);
      j["axiomReport"] = Json{{"ok", axioms.ok}, {"firstFailure", axioms.firstFailure}};
      Json fl = Json::array();
      for (const Flag& f : flags)
        fl.push_back(Json{{"module", f.name},
                          {"dim", f.dim},
                          {"unitInjective", f.injective},
                          {"unitBijective", f.bijective}});
      j["unitFlags"] = fl;
      Json cl = Json::array();
      for (const ClassInfo& cls : classes) {
        Json one;
        one["members"] = cls.members;
        one["zero"] = cls.zero;
        one["links"] = cls.links;
        cl.push_back(std::move(one));
      }
      j["isoClasses"] = cl;
      j["cornerComparison"] = Json{{"bocsDims", matJson(corner.bocsDims)},
                                   {"cornerDims", matJson(corner.cornerDims)},
                                   {"match", corner.match}};
    } else {
      os << "coring axioms: " << (axioms.ok ? "ok" : axioms.firstFailure) << "\n";
      os << "unit maps over the catalog:\n";
      std::size_t width = 0;
      for (const Flag& f : flags) width = std::max(width, f.name.size());
      for (const Flag& f : flags)
        os << "  " << f.name << std::string(width - f.name.size(), ' ') << "  dim " << f.dim
           << "  injective " << (f.injective ? "yes" : "no ") << "  bijective "
           << (f.bijective ? "yes" : "no") << "\n";
      os << "isomorphism classes:";
      for (const ClassInfo& cls : classes) {
        os << " {";
        for (std::size_t i = 0; i < cls.members.size(); ++i)
          os << (i ? ", " : "") << cls.members[i];
        os << "}" << (cls.zero ? " = 0" : "");
      }
      os << "\n";
      os << "corner hom dimensions: " << (corner.match ? "match" : "MISMATCH") << "\n";
    }
  } else if (o.json) {
    j["coring"] = nullptr;
  }

  emitOutput(o, o.json ? renderJson(j) : os.str());
  return verdictExit(ex.exists);
}

int runDomdim(const Opts& o) {
  const CorpusAlgebra ca = resolveInput(o.input);
  if (!presentationGate(ca)) return kInvariantFailure;
  RightModule m;
  std::string label;
  if (o.moduleName.empty()) {
    m = regularModule(ca.algebra);
    label = "regular";
  } else {
    m = catalogModule(ca, o.moduleName);
    label = o.moduleName;
  }
  const DomDim d = dominantDimension(m, o.cap);

  if (o.json) {
    Json j = preamble("domdim", o);
    j["module"] = label;
    j["moduleDim"] = m.dim;
    j["dominantDimension"] = domDimJson(d);
    emitOutput(o, renderJson(j));
    return kOk;
  }
  std::ostringstream os;
  os << "command: domdim\ninput: " << o.input << "\nseed: " << o.seed << "\n";
  os << "module: " << label << " (dim " << m.dim << ")\n";
  os << "dominant dimension: " << d.str() << "\n";
  emitOutput(o, os.str());
  return kOk;
}

int runCorpusList(const Opts& o) {
  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "corpus list";
    j["corpus"] = corpusList();
    emitOutput(o, renderJson(j));
    return kOk;
  }
  std::ostringstream os;
  for (const std::string& name : corpusList()) os << name << "\n";
  emitOutput(o, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench: gendo-symmetric classification and bocs structures "
               "for finite-dimensional algebras over the rationals"};
  app.require_subcommand(1);

  Opts o;
  std::string corpusAction;
  auto addCommon = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "algebra JSON file or corpus name")->required();
    sub->add_option("--seed", o.seed, "seed for randomized isomorphism search")
        ->capture_default_str();
    sub->add_option("--cap", o.cap, "resolution length cap")->capture_default_str();
    sub->add_flag("--json", o.json, "emit a JSON report with embedded witnesses");
    sub->add_option("--out", o.outPath, "write the report to this file");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "structural report");
  addCommon(analyze);
  CLI::App* gendo = app.add_subcommand("gendo", "decide the gendo-symmetric property");
  addCommon(gendo);
  CLI::App* bocs =
      app.add_subcommand("bocs", "decide and construct the coring on the dual bimodule");
  addCommon(bocs);
  CLI::App* domdim = app.add_subcommand("domdim", "dominant dimension of a module");
  addCommon(domdim);
  domdim->add_option("--module", o.moduleName, "catalog module name (default: regular)");
  CLI::App* corpus = app.add_subcommand("corpus", "named corpus utilities");
  corpus->add_option("action", corpusAction, "'list'")->required();
  corpus->add_flag("--json", o.json, "emit JSON");
  corpus->add_option("--out", o.outPath, "write the output to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return runAnalyze(o);
    if (app.got_subcommand(gendo)) return runGendo(o);
    if (app.got_subcommand(bocs)) return runBocs(o);
    if (app.got_subcommand(domdim)) return runDomdim(o);
    if (app.got_subcommand(corpus)) {
      if (corpusAction != "list") {
        std::cerr << "unknown corpus action '" << corpusAction << "' (expected 'list')\n";
        return kParseFailure;
      }
      return runCorpusList(o);
    }
  } catch (const Json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const JsonFormatError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kInvariantFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariantFailure;
  }
  return kParseFailure;
}
