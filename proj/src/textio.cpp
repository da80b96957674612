#include "qbbw/textio.hpp"

#include <sstream>

namespace qbbw {

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
	std::vector<std::string> out;
	std::string cur;
	for (char c : s) {
		if (c == sep) {
			out.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	out.push_back(cur);
	return out;
}

std::string strip(std::string s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
		s.erase(s.begin());
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
		s.pop_back();
	return s;
}

long long parse_int(const std::string &s, const std::string &what) {
	try {
		size_t pos = 0;
		long long v = std::stoll(strip(s), &pos);
		if (pos != strip(s).size())
			throw std::invalid_argument("");
		return v;
	} catch (const std::exception &) {
		throw std::invalid_argument("malformed " + what + ": \"" + s + "\"");
	}
}

} // namespace

Weight parse_weight(const std::string &text, int m, int n) {
	std::string s = strip(text);
	if (!s.empty() && s.front() == '(' && s.back() == ')')
		s = s.substr(1, s.size() - 2);
	auto blocks = split(s, '|');
	if (blocks.size() != 2)
		throw std::invalid_argument("weight \"" + text + "\" must contain exactly one block separator '|'");
	auto left = split(blocks[0], ','), right = split(blocks[1], ',');
	if (static_cast<int>(left.size()) != m || static_cast<int>(right.size()) != n)
		throw std::invalid_argument("weight \"" + text + "\" has block sizes " + std::to_string(left.size()) +
		                            "|" + std::to_string(right.size()) + ", expected " + std::to_string(m) +
		                            "|" + std::to_string(n));
	std::vector<BigRational> coords;
	for (const auto &t : left)
		coords.emplace_back(parse_int(t, "weight coordinate"));
	for (const auto &t : right)
		coords.emplace_back(parse_int(t, "weight coordinate"));
	return Weight(m, n, std::move(coords));
}

SubalgebraSpec parse_theta(const std::string &text, const RootData &rd) {
	SubalgebraSpec spec = cartan_spec(rd); // theta0 defaults to I
	for (const std::string &raw : split(strip(text), ';')) {
		std::string part = strip(raw);
		if (part.empty())
			continue;
		auto eq = part.find('=');
		if (eq == std::string::npos)
			throw std::invalid_argument("malformed theta spec segment \"" + part + "\"");
		std::string key = strip(part.substr(0, eq));
		std::string val = strip(part.substr(eq + 1));
		std::set<int> *target = nullptr;
		int max_index = rd.dim() - 1;
		if (key == "theta+") {
			target = &spec.theta_plus;
		} else if (key == "theta-") {
			target = &spec.theta_minus;
		} else if (key == "theta0") {
			target = &spec.theta0;
			max_index = rd.dim();
		} else {
			throw std::invalid_argument("unknown theta spec key \"" + key + "\"");
		}
		target->clear();
		if (val == "all") {
			for (int a = 1; a <= max_index; ++a)
				target->insert(a);
		} else if (!val.empty()) {
			for (const std::string &t : split(val, ',')) {
				long long a = parse_int(t, "theta index");
				if (a < 1 || a > max_index)
					throw std::invalid_argument("theta index " + std::to_string(a) + " out of range 1.." +
					                            std::to_string(max_index));
				target->insert(static_cast<int>(a));
			}
		}
	}
	return spec;
}

WeylElement parse_weyl(const std::string &text) {
	std::string s = strip(text);
	if (s.size() < 3 || s.front() != '[' || s.back() != ']')
		throw std::invalid_argument("malformed Weyl element \"" + text + "\"");
	s = s.substr(1, s.size() - 2);
	auto blocks = split(s, '|');
	if (blocks.size() != 2)
		throw std::invalid_argument("malformed Weyl element \"" + text + "\"");
	auto read = [&](const std::string &b) {
		std::vector<int> p;
		for (const std::string &t : split(b, ','))
			if (!strip(t).empty())
				p.push_back(static_cast<int>(parse_int(t, "permutation image")) - 1);
		return p;
	};
	return WeylElement(read(blocks[0]), read(blocks[1]));
}

} // namespace qbbw
