#include "rbmod/cli.hpp"

#include "rbmod/error.hpp"
#include "rbmod/linalg.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace rbmod::cli {

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::Verify, "verify"},         {Command::Classify, "classify"},
    {Command::SolveBlock, "solve-block"}, {Command::Analyze, "analyze"},
    {Command::Catalog, "catalog"},       {Command::OracleCompare, "oracle-compare"},
    {Command::RbCheck, "rb-check"},      {Command::Batch, "batch"},
};

Json parse_text(const std::string& text, std::string_view origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(origin) + ": " + e.what());
  }
}

Json load_input(const JobSpec& job) {
  Json doc = Json::object();
  const auto first = job.input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos) {
    if (job.input[first] == '{' || job.input[first] == '[') {
      doc = parse_text(job.input, "inline input");
    } else {
      std::ifstream in(job.input);
      if (!in) throw ParseError("cannot open input file " + job.input);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      doc = parse_text(text, job.input);
    }
  }
  if (!job.params.is_object()) throw ParseError("job parameters must be an object");
  if (!job.params.empty()) {
    if (!doc.is_object()) throw ParseError("input must be a JSON object for this command");
    for (const auto& [k, v] : job.params.items()) doc[k] = v;
  }
  return doc;
}

bool has(const Json& doc, const char* key) {
  return doc.is_object() && doc.contains(key) && !doc[key].is_null();
}

const Json& require(const Json& doc, const char* key, Command c) {
  if (!has(doc, key)) {
    throw InvalidArgument(std::string(to_string(c)) + " needs \"" + key + "\"");
  }
  return doc[key];
}

std::size_t count(const Json& doc, const char* key, Command c) {
  const auto& v = require(doc, key, c);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::optional<Flavor> flavor_of(const JobSpec& job, const Json& doc) {
  if (job.flavor) return job.flavor;
  if (has(doc, "flavor")) return json::parse_flavor(doc["flavor"].get<std::string>());
  return std::nullopt;
}

unsigned truncation_of(const JobSpec& job, const Json& doc) {
  if (job.truncation) return *job.truncation;
  if (has(doc, "truncation")) {
    const auto& v = doc["truncation"];
    if (!v.is_number_integer() || v.get<long long>() < 1)
      throw ParseError("truncation must be a positive integer");
    return v.get<unsigned>();
  }
  return default_truncation();
}

ModulePair module_of(const JobSpec& job, const Json& doc) {
  const Json& src = has(doc, "module") ? doc["module"] : doc;
  std::optional<Flavor> fallback = job.flavor;
  if (!fallback && has(doc, "flavor")) fallback = json::parse_flavor(doc["flavor"].get<std::string>());
  if (job.flavor && src.is_object() && src.contains("flavor")) {
    // the command-line flavor wins over the document
    Json copy = src;
    copy["flavor"] = std::string(to_string(*job.flavor));
    return json::parse_module(copy);
  }
  return json::parse_module(src, fallback);
}

RBOperator operator_for(Flavor flavor, const Json& doc, unsigned truncation) {
  std::optional<Rational> b;
  if (flavor == Flavor::KxP1) b = has(doc, "b") ? json::parse_rational(doc["b"], "b") : Rational(1);
  return RBOperator::make(family_of(flavor), 1, b, truncation);
}

JobResult verify(const JobSpec& job, const Json& doc) {
  const auto mp = module_of(job, doc);
  const auto op = operator_for(mp.flavor, doc, truncation_of(job, doc));
  const bool eq = verify_equation(mp);
  const auto axiom = verify_module_axiom(op, mp);
  Json r;
  r["command"] = "verify";
  r["module"] = json::to_json(mp);
  r["valid"] = eq;
  r["axiom_holds"] = axiom.holds;
  r["axiom_first_failure"] = axiom.first_failure ? Json(*axiom.first_failure) : Json(nullptr);
  r["agree"] = eq == axiom.holds;
  r["truncation"] = op.truncation;
  return {eq ? kOk : kFalse, std::move(r)};
}

std::optional<KxVariant> variant_of_job(const JobSpec& job, const Json& doc) {
  if (job.variant) return job.variant;
  if (has(doc, "variant")) return json::parse_variant(doc["variant"].get<std::string>());
  return std::nullopt;
}

SolutionSpace closed_form(const JobSpec& job, const Json& doc, const DenseMatrix& B,
                          std::optional<Flavor> flavor) {
  auto variant = variant_of_job(job, doc);
  if (!variant && flavor && *flavor != Flavor::XKx) variant = variant_of(*flavor);
  if (variant) return classify_kx(B, *variant);
  if (!flavor) throw InvalidArgument(std::string(to_string(job.command)) + " needs a flavor or variant");
  return solution_space_xkx(B);
}

Json header(Command c, std::optional<Flavor> flavor, std::optional<KxVariant> variant) {
  Json r;
  r["command"] = std::string(to_string(c));
  if (flavor) r["flavor"] = std::string(to_string(*flavor));
  if (variant) r["variant"] = *variant == KxVariant::I14 ? "i14" : "i23";
  return r;
}

JobResult classify(const JobSpec& job, const Json& doc) {
  const auto B = json::parse_matrix(require(doc, "B", job.command), "B");
  const auto flavor = flavor_of(job, doc);
  const auto ss = closed_form(job, doc, B, flavor);
  Json r = header(job.command, flavor, variant_of_job(job, doc));
  r.update(json::to_json(ss));
  return {kOk, std::move(r)};
}

struct BlockArgs {
  std::size_t s, t;
  Rational b1, b2;
};

BlockArgs block_args(const JobSpec& job, const Json& doc) {
  BlockArgs a{count(doc, "s", job.command), count(doc, "t", job.command),
              json::parse_rational(require(doc, "b1", job.command), "b1"),
              json::parse_rational(require(doc, "b2", job.command), "b2")};
  if (a.s == 0 || a.t == 0) throw InvalidArgument("block sizes s and t must be positive");
  return a;
}

JobResult solve_block_job(const JobSpec& job, const Json& doc) {
  const auto a = block_args(job, doc);
  Json r = header(job.command, std::nullopt, std::nullopt);
  r["s"] = a.s;
  r["t"] = a.t;
  r["b1"] = a.b1.str();
  r["b2"] = a.b2.str();
  r.update(json::to_json(solve_block(a.s, a.t, a.b1, a.b2)));
  return {kOk, std::move(r)};
}

JobResult analyze(const JobSpec& job, const Json& doc) {
  const auto mp = module_of(job, doc);
  Json r = header(job.command, std::nullopt, std::nullopt);
  r["module"] = json::to_json(mp);
  r["valid"] = verify_equation(mp);
  if (!r["valid"].get<bool>()) {
    for (const char* k : {"irreducible", "submodule_witness", "indecomposable", "commutant_dim",
                          "regular_rank"})
      r[k] = nullptr;
    return {kFalse, std::move(r)};
  }
  int code = kOk;
  const auto irr = is_irreducible(mp);
  r["irreducible"] = irr.irreducible;
  r["submodule_witness"] = irr.witness ? json::to_json(*irr.witness) : Json(nullptr);
  if (irr.note) {
    r["note"] = *irr.note;
    code = kUndecided;
  }
  const auto end = is_indecomposable(mp);
  r["indecomposable"] = std::string(to_string(end.verdict));
  if (end.verdict == Verdict::Inconclusive) code = kUndecided;
  r["commutant_dim"] = end.commutant_basis.size();
  r["radical_dim"] = end.radical_dim;
  r["splitting_idempotent"] =
      end.splitting_idempotent ? json::to_json(*end.splitting_idempotent) : Json(nullptr);
  r["regular_rank"] = eigenspace(mp.B, -1).size();
  return {code, std::move(r)};
}

JobResult catalog_job(const JobSpec& job, const Json& doc) {
  const bool spot = has(doc, "spot") && doc["spot"].get<bool>();
  const Flavor flavor = flavor_of(job, doc).value_or(Flavor::XKx);
  std::vector<CatalogEntry> entries;
  if (spot) {
    if (flavor != Flavor::XKx) throw InvalidArgument("spot examples exist for flavor XKx only");
    entries = spot_examples();
  } else {
    entries = catalog(count(doc, "n", job.command), flavor);
  }
  Json r = header(job.command, flavor, std::nullopt);
  if (!spot) r["n"] = doc["n"];
  Json list = Json::array();
  bool all = true;
  for (const auto& e : entries) {
    Json j = json::to_json(e);
    const bool ok = verify_equation(e.representative);
    j["verified"] = ok;
    j["oracle_dim"] = oracle_full_kernel(e.representative.B, flavor).size();
    all = all && ok;
    list.push_back(std::move(j));
  }
  r["families"] = std::move(list);
  return {all ? kOk : kFalse, std::move(r)};
}

JobResult oracle_compare(const JobSpec& job, const Json& doc) {
  Json r = header(job.command, flavor_of(job, doc), variant_of_job(job, doc));
  std::vector<DenseMatrix> closed, oracle;
  if (has(doc, "B")) {
    const auto B = json::parse_matrix(doc["B"], "B");
    auto flavor = flavor_of(job, doc);
    if (!flavor) {
      if (auto v = variant_of_job(job, doc)) flavor = *v == KxVariant::I14 ? Flavor::KxP1 : Flavor::KxP2;
    }
    closed = closed_form(job, doc, B, flavor).basis;
    oracle = oracle_full_kernel(B, *flavor);
  } else {
    const auto a = block_args(job, doc);
    r["s"] = a.s;
    r["t"] = a.t;
    r["b1"] = a.b1.str();
    r["b2"] = a.b2.str();
    const auto pattern = solve_block(a.s, a.t, a.b1, a.b2);
    for (const auto& c : pattern.free_cells) closed.push_back(DenseMatrix::unit(a.s, a.t, c.row, c.col));
    for (const auto& v : oracle_block_kernel(a.s, a.t, a.b1, a.b2)) oracle.push_back(unvec(v, a.s, a.t));
  }
  const bool equal = same_matrix_span(closed, oracle);
  r["closed_form_dim"] = closed.size();
  r["oracle_dim"] = oracle.size();
  r["equal"] = equal;
  return {equal ? kOk : kFalse, std::move(r)};
}

JobResult rb_check(const JobSpec& job, const Json& doc) {
  Json spec = has(doc, "operator") ? doc["operator"] : doc;
  spec["truncation"] = truncation_of(job, spec.is_object() && spec.contains("truncation") ? spec : doc);
  if (job.truncation) spec["truncation"] = *job.truncation;
  const auto op = json::parse_operator(spec);
  const auto rep = verify_rb_identity(op);
  Json r = header(job.command, std::nullopt, std::nullopt);
  r["operator"] = json::to_json(op);
  r["holds"] = rep.holds;
  r["first_failure"] =
      rep.first_failure ? Json::array({rep.first_failure->first, rep.first_failure->second}) : Json(nullptr);
  return {rep.holds ? kOk : kFalse, std::move(r)};
}

JobResult batch(const JobSpec& job, const Json& doc) {
  const Json& list = doc.is_array() ? doc : require(doc, "jobs", job.command);
  if (!list.is_array()) throw ParseError("batch: \"jobs\" must be an array");
  std::vector<JobSpec> jobs;
  for (const auto& j : list) {
    jobs.push_back(job_from_json(j));
    if (jobs.back().command == Command::Batch) throw InvalidArgument("batch jobs cannot nest");
    if (!jobs.back().truncation && job.truncation) jobs.back().truncation = job.truncation;
  }
  const auto results = run_batch(jobs);
  Json r = header(job.command, std::nullopt, std::nullopt);
  Json out = Json::array();
  int code = kOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    out.push_back({{"index", i}, {"exit_code", results[i].exit_code}, {"report", results[i].report}});
    code = std::max(code, results[i].exit_code);
  }
  r["results"] = std::move(out);
  return {code, std::move(r)};
}

JobResult dispatch(const JobSpec& job) {
  const Json doc = load_input(job);
  switch (job.command) {
    case Command::Verify: return verify(job, doc);
    case Command::Classify: return classify(job, doc);
    case Command::SolveBlock: return solve_block_job(job, doc);
    case Command::Analyze: return analyze(job, doc);
    case Command::Catalog: return catalog_job(job, doc);
    case Command::OracleCompare: return oracle_compare(job, doc);
    case Command::RbCheck: return rb_check(job, doc);
    case Command::Batch: return batch(job, doc);
  }
  throw InvalidArgument("unknown command");
}

JobResult failure(const JobSpec& job, std::string_view kind, const std::string& message, int code) {
  Json r;
  r["command"] = std::string(to_string(job.command));
  r["error"] = {{"kind", std::string(kind)}, {"message", message}};
  return {code, std::move(r)};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  return std::nullopt;
}

std::string_view to_string(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAModule:
    case ErrorKind::NotQuasiIdempotent:
      return kFalse;
    case ErrorKind::IrrationalSpectrum:
      return kUndecided;
    default:
      return kInputError;
  }
}

unsigned default_truncation() {
  if (const char* env = std::getenv("RBMOD_TRUNCATION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return kDefaultTruncation;
}

JobResult execute(const JobSpec& job) {
  try {
    return dispatch(job);
  } catch (const Error& e) {
    return failure(job, rbmod::to_string(e.kind()), e.what(), exit_code_for(e.kind()));
  } catch (const nlohmann::json::exception& e) {
    return failure(job, "ParseError", e.what(), kInputError);
  } catch (const std::exception& e) {
    return failure(job, "InternalError", e.what(), kInputError);
  }
}

std::vector<JobResult> run_batch(const std::vector<JobSpec>& jobs) {
  std::vector<JobResult> results(jobs.size());
  const auto n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) results[i] = execute(jobs[i]);
  return results;
}

JobSpec job_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("job: expected an object");
  auto it = j.find("command");
  if (it == j.end() || !it->is_string()) throw ParseError("job: missing \"command\"");
  auto c = parse_command(it->get<std::string>());
  if (!c) throw ParseError("job: unknown command \"" + it->get<std::string>() + "\"");
  JobSpec spec;
  spec.command = *c;
  for (const auto& [k, v] : j.items()) {
    if (k == "command") continue;
    if (k == "input") {
      if (!v.is_string()) throw ParseError("job: input must be a string");
      spec.input = v.get<std::string>();
    } else if (k == "output") {
      spec.output_path = v.get<std::string>();
    } else {
      spec.params[k] = v;
    }
  }
  return spec;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto result = execute(job);
  const std::string text = result.report.dump(2) + "\n";
  if (job.output_path) {
    std::ofstream file(*job.output_path);
    if (!file) {
      err << "rbmod: cannot write " << *job.output_path << "\n";
      return kInputError;
    }
    file << text;
  } else {
    out << text;
  }
  if (result.report.contains("error")) {
    err << "rbmod: " << result.report["error"]["kind"].get<std::string>() << ": "
        << result.report["error"]["message"].get<std::string>() << "\n";
  }
  return result.exit_code;
}

}  // namespace rbmod::cli
