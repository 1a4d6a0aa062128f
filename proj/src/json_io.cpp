#include "ljlab/json_io.hpp"

#include <cmath>
#include <fstream>

namespace ljlab::io
{

json to_json(const ComplexMatrix& m)
{
	json re = json::array();
	json im = json::array();
	for(Eigen::Index i = 0; i < m.rows(); ++i) {
		json rr = json::array();
		json ri = json::array();
		for(Eigen::Index j = 0; j < m.cols(); ++j) {
			rr.push_back(m(i, j).real());
			ri.push_back(m(i, j).imag());
		}
		re.push_back(std::move(rr));
		im.push_back(std::move(ri));
	}
	return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

namespace
{

[[noreturn]] void parse_error(const std::string& what)
{
	throw Error(ErrorKind::Parse, what);
}

void read_part(const json& j, const char* key, Eigen::Index n, ComplexMatrix& m, bool imaginary)
{
	if(!j.contains(key)) {
		if(imaginary) {
			return;  // a purely real matrix may omit "im"
		}
		parse_error(std::string("matrix is missing \"") + key + "\"");
	}
	const json& rows = j.at(key);
	if(!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
		parse_error(std::string("\"") + key + "\" must have " + std::to_string(n) + " rows");
	}
	for(Eigen::Index i = 0; i < n; ++i) {
		const json& row = rows[static_cast<std::size_t>(i)];
		if(!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
			parse_error(std::string("\"") + key + "\" row " + std::to_string(i) + " must have " +
			            std::to_string(n) + " entries");
		}
		for(Eigen::Index k = 0; k < n; ++k) {
			const json& x = row[static_cast<std::size_t>(k)];
			if(!x.is_number()) {
				parse_error(std::string("\"") + key + "\" entries must be numbers");
			}
			const double v = x.get<double>();
			if(!std::isfinite(v)) {
				parse_error("matrix entries must be finite");
			}
			if(imaginary) {
				m(i, k).imag(v);
			} else {
				m(i, k).real(v);
			}
		}
	}
}

} // namespace

ComplexMatrix matrix_from_json(const json& j)
{
	if(!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_integer()) {
		parse_error("matrix must be an object with an integer \"dim\"");
	}
	const auto n = j.at("dim").get<Eigen::Index>();
	if(n < 1) {
		parse_error("\"dim\" must be positive");
	}
	ComplexMatrix m = ComplexMatrix::Zero(n, n);
	read_part(j, "re", n, m, false);
	read_part(j, "im", n, m, true);
	return m;
}

json to_json(const RealSubspace& s)
{
	json mats = json::array();
	for(const Observable& e : s.basis()) {
		mats.push_back(to_json(e.matrix()));
	}
	return json{{"ambient_dim", s.ambient_dim()}, {"matrices", std::move(mats)}};
}

RealSubspace subspace_from_json(const json& j)
{
	if(!j.is_object() || !j.contains("ambient_dim") || !j.at("ambient_dim").is_number_integer() ||
	   !j.contains("matrices") || !j.at("matrices").is_array()) {
		parse_error("subspace must have an integer \"ambient_dim\" and a \"matrices\" list");
	}
	const auto n = j.at("ambient_dim").get<Eigen::Index>();
	if(n < 1) {
		parse_error("\"ambient_dim\" must be positive");
	}
	RealSubspace s(n);
	for(const json& m : j.at("matrices")) {
		const ComplexMatrix mat = matrix_from_json(m);
		if(mat.rows() != n) {
			parse_error("subspace matrix size differs from \"ambient_dim\"");
		}
		try {
			s.adjoin(Observable(mat));
		} catch(const Error& e) {
			parse_error(std::string("subspace matrix rejected: ") + e.what());
		}
	}
	return s;
}

namespace
{

json observables(const std::vector<Observable>& xs)
{
	json out = json::array();
	for(const Observable& x : xs) {
		out.push_back(to_json(x.matrix()));
	}
	return out;
}

} // namespace

json to_json(const ClassicalityVerdict& v)
{
	json j{{"criterion", std::string(to_string(v.criterion))},
	       {"classical", v.classical},
	       {"max_violation", v.max_violation}};
	if(!v.classical) {
		j["certificate"] = json{{"observables", observables(v.certificate)}, {"value", v.certificate_value}};
	}
	return j;
}

json to_json(const Classification& c)
{
	json verdicts = json::array();
	for(const auto& v : c.verdicts) {
		verdicts.push_back(to_json(v));
	}
	return json{{"classical", c.classical}, {"verdicts", std::move(verdicts)}};
}

json to_json(const WitnessReport& r)
{
	return json{{"kind", std::string(to_string(r.kind))},
	            {"no_violation", r.no_violation},
	            {"violation", r.violation},
	            {"witness", to_json(r.witness.matrix())},
	            {"inputs", observables(r.inputs)},
	            {"trials", r.trials},
	            {"refinement_steps", r.refinement_steps}};
}

json to_json(const GenerationReport& r)
{
	return json{{"generators", observables(r.generators)},
	            {"closure_dim", r.closure_dim},
	            {"target_dim", r.target_dim},
	            {"generated", r.generated},
	            {"rounds", r.rounds},
	            {"trajectory", r.trajectory}};
}

json to_json(const FunctionRepresentation& r)
{
	json points = json::array();
	for(Eigen::Index k = 0; k < r.points(); ++k) {
		json values = json::array();
		for(Eigen::Index j = 0; j < r.values.cols(); ++j) {
			values.push_back(r.values(k, j));
		}
		points.push_back(json{{"multiplicity", r.multiplicity[static_cast<std::size_t>(k)]},
		                      {"values", std::move(values)}});
	}
	return json{{"algebra", to_json(r.algebra)}, {"points", std::move(points)}};
}

json read_file(const std::string& path)
{
	std::ifstream in(path);
	if(!in) {
		parse_error("cannot open " + path);
	}
	try {
		return json::parse(in);
	} catch(const json::exception& e) {
		parse_error(path + ": " + e.what());
	}
}

} // namespace ljlab::io
