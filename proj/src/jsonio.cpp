#include "qbbw/jsonio.hpp"

#include "qbbw/textio.hpp"

namespace qbbw {

nlohmann::ordered_json character_to_json(const Character &c) {
	nlohmann::ordered_json j;
	j["context"] = {c.m(), c.n()};
	j["terms"] = nlohmann::ordered_json::array();
	for (const auto &[w, k] : c.terms()) {
		nlohmann::ordered_json t;
		t["weight"] = w;
		t["mult"] = k;
		j["terms"].push_back(std::move(t));
	}
	return j;
}

Character character_from_json(const nlohmann::json &j) {
	int m = j.at("context").at(0).get<int>();
	int n = j.at("context").at(1).get<int>();
	Character c(m, n);
	for (const auto &t : j.at("terms"))
		c.add_term(t.at("weight").get<std::vector<long long>>(), t.at("mult").get<long long>());
	return c;
}

nlohmann::ordered_json result_to_json(const CohomologyResult &r) {
	nlohmann::ordered_json j;
	if (r.is_vanishing()) {
		j["status"] = "vanishes";
		return j;
	}
	const Concentrated &c = r.value();
	j["status"] = "concentrated";
	j["degree"] = c.degree;
	j["w"] = c.w.to_string();
	j["mu"] = c.mu.integer_coords();
	j["dimension"] = c.dimension.str();
	j["character"] = character_to_json(c.character);
	return j;
}

CohomologyResult result_from_json(const nlohmann::json &j) {
	if (j.at("status").get<std::string>() == "vanishes")
		return CohomologyResult::vanishes();
	Character character = character_from_json(j.at("character"));
	const int m = character.m(), n = character.n();
	auto mu_ints = j.at("mu").get<std::vector<long long>>();
	std::vector<BigRational> coords(mu_ints.begin(), mu_ints.end());
	Concentrated c{j.at("degree").get<int>(), parse_weyl(j.at("w").get<std::string>()),
	               Weight(m, n, std::move(coords)), std::move(character),
	               BigInt(j.at("dimension").get<std::string>())};
	return CohomologyResult::concentrated(std::move(c));
}

} // namespace qbbw
