#include "ljlab/cli.hpp"

#include "ljlab/json_io.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace ljlab::cli
{

namespace
{

using io::json;

struct SessionConfig
{
	std::string command;
	int dim = 2;
	int trials = 1;
	std::uint64_t seed = 0;
	int budget = 1000;
	double tol = 1e-9;
	std::string in;
	std::string algebra;
	std::string out;
	std::string kind = "avr";
	std::string mode = "jordan3";
	bool timing = false;
};

/// Usage or validation failure: exit 2, nothing written to the report stream.
struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct Check
{
	std::string name;
	double value = 0.0;
	bool pass = true;
	json extra = json::object();
};

struct Outcome
{
	std::vector<Check> checks;
	json result = json::object();
	int status_on_failure = kCheckFailure;
};

json config_echo(const SessionConfig& c)
{
	json j{{"dim", c.dim},
	       {"trials", c.trials},
	       {"seed", c.seed},
	       {"budget", c.budget},
	       {"tolerance",
	        {{"zero_tol", c.tol},
	         {"relative", true},
	         {"rank_tol", RealSubspace::kRankTol},
	         {"classical_tol", 1e-8},
	         {"state_tol", State::kValidityTol}}}};
	if(!c.in.empty()) {
		j["in"] = c.in;
	}
	if(!c.algebra.empty()) {
		j["algebra"] = c.algebra;
	}
	if(c.command == "witness") {
		j["kind"] = c.kind;
	}
	if(c.command == "generate") {
		j["mode"] = c.mode;
	}
	return j;
}

Tolerance tolerance(const SessionConfig& c)
{
	return Tolerance{c.tol, true};
}

json load_input(const std::string& path)
{
	try {
		return io::read_file(path);
	} catch(const Error& e) {
		throw UsageError(e.what());
	}
}

Outcome cmd_verify(const SessionConfig& c)
{
	const Tolerance tol = tolerance(c);
	const std::vector<std::string> names{"jacobi", "leibniz", "associator_identity", "weak_associativity",
	                                     "norm_axioms", "recover_associative"};
	std::vector<Check> checks;
	std::vector<double> worst_ratio(names.size(), 0.0);
	std::vector<int> failures(names.size(), 0);
	for(const auto& n : names) {
		checks.push_back(Check{n});
	}
	double max_associator = 0.0;

	for(int t = 0; t < c.trials; ++t) {
		Rng rng(trial_seed(Seed{c.seed}, static_cast<std::uint64_t>(t)));
		const Observable a = Observable::hermitian_part(rng.hermitian(c.dim));
		const Observable b = Observable::hermitian_part(rng.hermitian(c.dim));
		const Observable x = Observable::hermitian_part(rng.hermitian(c.dim));

		const ComplexMatrix direct = a.matrix() * b.matrix();
		IdentityReport recovered{"recover_associative"};
		recovered.residual = (recover_associative(a, b) - direct).cwiseAbs().maxCoeff();
		recovered.threshold = 1e-12 * std::max(1.0, a.norm() * b.norm());
		recovered.passed = recovered.residual <= recovered.threshold;

		const std::vector<IdentityReport> reports{check_jacobi(a, b, x, tol),
		                                          check_leibniz(a, b, x, tol),
		                                          check_associator_identity(a, b, x, tol),
		                                          check_weak_associativity(a, b, tol),
		                                          check_norm_axioms(a, b, tol),
		                                          recovered};
		for(std::size_t k = 0; k < reports.size(); ++k) {
			checks[k].value = std::max(checks[k].value, reports[k].residual);
			worst_ratio[k] = std::max(worst_ratio[k], reports[k].residual / reports[k].threshold);
			if(!reports[k].passed) {
				++failures[k];
			}
		}
		max_associator = std::max(max_associator, associator(a, b, x).norm());
	}
	for(std::size_t k = 0; k < checks.size(); ++k) {
		checks[k].pass = failures[k] == 0;
		checks[k].extra = json{{"failures", failures[k]}, {"worst_threshold_ratio", worst_ratio[k]}};
	}
	return Outcome{checks, json{{"max_associator_norm", max_associator}}};
}

Outcome cmd_classify(const SessionConfig& c)
{
	if(c.in.empty()) {
		throw UsageError("classify needs --in <state.json>");
	}
	std::optional<State> state;
	try {
		state.emplace(io::matrix_from_json(load_input(c.in)));
	} catch(const Error& e) {
		throw UsageError(e.what());
	}
	RealSubspace L = RealSubspace::full(state->dim());
	if(!c.algebra.empty()) {
		try {
			L = io::subspace_from_json(load_input(c.algebra));
		} catch(const Error& e) {
			throw UsageError(e.what());
		}
		if(L.ambient_dim() != state->dim()) {
			throw UsageError("algebra and state sizes differ");
		}
	}
	std::optional<ClassicalityTester> tester;
	try {
		tester.emplace(L);
	} catch(const Error& e) {
		throw UsageError(e.what());
	}
	// CriteriaDisagree propagates to run() and becomes exit 3.
	const Classification verdict = classify(*state, *tester);
	Outcome o;
	o.checks.push_back(Check{"criteria_agree", static_cast<double>(verdict.verdicts.size()), true});
	o.result = io::to_json(verdict);
	o.result["algebra_dim"] = L.dim();
	return o;
}

Outcome cmd_witness(const SessionConfig& c)
{
	WitnessReport r = [&] {
		if(c.kind == "avr") {
			return avr_witness_search(c.dim, Seed{c.seed}, c.budget);
		}
		if(c.kind == "associator") {
			return associator_witness_search(c.dim, Seed{c.seed}, c.budget);
		}
		throw UsageError("--kind must be avr or associator");
	}();
	const bool found = r.no_violation || (r.kind == WitnessKind::AvrPair ? r.violation < 0.0 : r.violation > 0.0);
	Outcome o;
	o.checks.push_back(Check{c.kind == "avr" ? "avr_violation" : "associator_violation", r.violation, found});
	o.result = io::to_json(r);
	return o;
}

Observable traceless_part(const Observable& a)
{
	const double shift = a.trace() / static_cast<double>(a.dim());
	return a - Observable::identity(a.dim()) * shift;
}

Outcome cmd_generate(const SessionConfig& c)
{
	const bool lie2 = c.mode == "lie2";
	if(!lie2 && c.mode != "jordan3") {
		throw UsageError("--mode must be lie2 or jordan3");
	}
	auto run_pair = [&](const Observable& a, const Observable& b) {
		return lie2 ? lie_generate(a, b) : jordan_generate_three(a, b);
	};

	Outcome o;
	json reports = json::array();
	if(!c.in.empty()) {
		std::optional<Observable> a;
		std::optional<Observable> b;
		try {
			const json pair = load_input(c.in);
			if(!pair.is_object() || !pair.contains("a") || !pair.contains("b")) {
				throw UsageError("generator file must hold matrices \"a\" and \"b\"");
			}
			a.emplace(io::matrix_from_json(pair.at("a")));
			b.emplace(io::matrix_from_json(pair.at("b")));
			require_same_dim(a->matrix(), b->matrix());
		} catch(const Error& e) {
			throw UsageError(e.what());
		}
		const GenerationReport r = run_pair(*a, *b);
		o.checks.push_back(Check{"generated[0]", static_cast<double>(r.closure_dim), r.generated});
		json j = io::to_json(r);
		j["attempts"] = 1;
		reports.push_back(std::move(j));
	} else {
		for(int t = 0; t < c.trials; ++t) {
			GenerationReport r;
			int attempts = 0;
			// Genericity can fail on a measure-zero set: retry once with a fresh pair.
			for(; attempts < 2 && (attempts == 0 || !r.generated); ++attempts) {
				Rng rng(trial_seed(Seed{c.seed}, static_cast<std::uint64_t>(2 * t + attempts)));
				Observable a = Observable::hermitian_part(rng.hermitian(c.dim));
				Observable b = Observable::hermitian_part(rng.hermitian(c.dim));
				if(lie2) {
					a = traceless_part(a);
					b = traceless_part(b);
				}
				r = run_pair(a, b);
			}
			o.checks.push_back(Check{"generated[" + std::to_string(t) + "]", static_cast<double>(r.closure_dim),
			                         r.generated});
			json j = io::to_json(r);
			j["attempts"] = attempts;
			reports.push_back(std::move(j));
		}
	}
	o.result = json{{"reports", std::move(reports)}};
	return o;
}

Outcome cmd_repr(const SessionConfig& c)
{
	const std::string path = c.algebra.empty() ? c.in : c.algebra;
	if(path.empty()) {
		throw UsageError("repr needs --algebra <subspace.json>");
	}
	std::optional<RealSubspace> L;
	try {
		L.emplace(io::subspace_from_json(load_input(path)));
	} catch(const Error& e) {
		throw UsageError(e.what());
	}
	Outcome o;
	try {
		const FunctionRepresentation r = function_representation(*L, tolerance(c));
		double reconstruction = 0.0;
		for(Eigen::Index j = 0; j < L->dim(); ++j) {
			const ComplexMatrix back = r.reconstruct(r.values.col(j));
			reconstruction = std::max(reconstruction, (back - (*L)[static_cast<std::size_t>(j)].matrix()).norm());
		}
		o.checks.push_back(Check{"reconstruction", reconstruction, reconstruction <= 1e-8});
		o.result = io::to_json(r);
	} catch(const Error& e) {
		if(e.kind() != ErrorKind::NotAssociative && e.kind() != ErrorKind::NotClosed) {
			throw;
		}
		Check failed{"associative", 0.0, false};
		json diagnostic{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
		if(e.kind() == ErrorKind::NotAssociative) {
			const StructureCheck s = jordan_associativity(*L, tolerance(c));
			failed.value = s.max_defect;
			json triple = json::array();
			for(std::size_t idx : s.certificate) {
				triple.push_back(io::to_json((*L)[idx].matrix()));
			}
			diagnostic["certificate"] = json{{"observables", std::move(triple)}, {"associator_norm", s.max_defect}};
		}
		o.checks.push_back(failed);
		o.result = std::move(diagnostic);
	}
	return o;
}

void validate(const SessionConfig& c)
{
	if(c.dim < 1) {
		throw UsageError("--dim must be >= 1");
	}
	if(c.trials < 1) {
		throw UsageError("--trials must be >= 1");
	}
	if(c.budget < 1) {
		throw UsageError("--budget must be >= 1");
	}
	if(!(c.tol > 0.0)) {
		throw UsageError("--tol must be positive");
	}
}

std::uint64_t default_seed()
{
	if(const char* env = std::getenv("LJLAB_SEED"); env != nullptr && *env != '\0') {
		try {
			return std::stoull(env);
		} catch(const std::exception&) {
			throw UsageError(std::string("LJLAB_SEED is not an unsigned integer: ") + env);
		}
	}
	return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	SessionConfig c;
	try {
		c.seed = default_seed();
	} catch(const UsageError& e) {
		err << "error: " << e.what() << "\n";
		return kUsage;
	}

	CLI::App app{"Lie-Jordan algebra toolkit: identities, classicality, witnesses, generation", "ljlab"};
	app.require_subcommand(1);
	app.set_version_flag("--version", kVersion);

	auto add_common = [&](CLI::App* sub) {
		sub->add_option("--dim", c.dim, "Matrix size");
		sub->add_option("--trials", c.trials, "Sample count");
		sub->add_option("--seed", c.seed, "Random seed (default: $LJLAB_SEED or 0)");
		sub->add_option("--budget", c.budget, "Witness search trial budget");
		sub->add_option("--tol", c.tol, "Zero tolerance for identity checks");
		sub->add_option("--in", c.in, "Input JSON file");
		sub->add_option("--algebra", c.algebra, "Subspace JSON file");
		sub->add_option("--out", c.out, "Write the report here instead of stdout");
		sub->add_option("--kind", c.kind, "Witness kind: avr | associator");
		sub->add_option("--mode", c.mode, "Generation mode: lie2 | jordan3");
		sub->add_flag("--timing", c.timing, "Include wall-clock duration in the report");
	};
	auto* verify = app.add_subcommand("verify", "Check the algebraic identities on random tuples");
	auto* classify_cmd = app.add_subcommand("classify", "Classify a state as classical or quantum");
	auto* witness = app.add_subcommand("witness", "Search for a quantumness witness");
	auto* generate = app.add_subcommand("generate", "Test Lie two-generation or Jordan three-generation");
	auto* repr = app.add_subcommand("repr", "Function representation of an associative algebra");
	for(auto* sub : {verify, classify_cmd, witness, generate, repr}) {
		add_common(sub);
	}
	// verify defaults to a 1000-sample sweep
	verify->get_option("--trials")->default_val(1000);

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch(const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? kPass : kUsage;
	}
	c.command = app.get_subcommands().front()->get_name();

	const auto start = std::chrono::steady_clock::now();
	Outcome outcome;
	try {
		validate(c);
		if(c.command == "verify") {
			outcome = cmd_verify(c);
		} else if(c.command == "classify") {
			outcome = cmd_classify(c);
		} else if(c.command == "witness") {
			outcome = cmd_witness(c);
		} else if(c.command == "generate") {
			outcome = cmd_generate(c);
		} else {
			outcome = cmd_repr(c);
		}
	} catch(const UsageError& e) {
		err << "error: " << e.what() << "\n";
		return kUsage;
	} catch(const Error& e) {
		err << "internal error: " << e.what() << "\n";
		return e.kind() == ErrorKind::CriteriaDisagree ? kInternal : kUsage;
	}
	const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

	bool pass = true;
	json checks = json::array();
	for(const Check& k : outcome.checks) {
		json j{{"name", k.name}, {"value", k.value}, {"pass", k.pass}};
		j.update(k.extra);
		checks.push_back(std::move(j));
		pass = pass && k.pass;
	}
	json report{{"command", c.command},
	            {"version", kVersion},
	            {"config", config_echo(c)},
	            {"checks", std::move(checks)},
	            {"pass", pass},
	            {"result", std::move(outcome.result)}};
	if(c.timing) {
		report["duration_s"] = seconds;
	}

	const std::string text = report.dump(2) + "\n";
	if(c.out.empty()) {
		out << text;
	} else {
		std::ofstream f(c.out);
		if(!f) {
			err << "error: cannot write " << c.out << "\n";
			return kUsage;
		}
		f << text;
	}
	return pass ? kPass : outcome.status_on_failure;
}

} // namespace ljlab::cli
