#include "liehopf/report.h"

#include <algorithm>

namespace liehopf {

std::string_view to_string(Status s)
{
	switch (s)
	{
	case Status::Pass: return "pass";
	case Status::Fail: return "fail";
	case Status::Skip: return "skip";
	}
	return "?";
}

CheckRecord make_record(std::string name, bool ok, std::string witness)
{
	return {std::move(name), ok ? Status::Pass : Status::Fail,
	        std::move(witness)};
}

void Report::append(std::vector<CheckRecord> rs, std::string_view prefix)
{
	for (auto &r : rs)
	{
		if (!prefix.empty())
			r.name = std::string(prefix) + "." + r.name;
		records.push_back(std::move(r));
	}
}

void Report::sort()
{
	std::stable_sort(records.begin(), records.end(),
	                 [](auto const &a, auto const &b) { return a.name < b.name; });
}

std::size_t Report::count(Status s) const
{
	return std::count_if(records.begin(), records.end(),
	                     [s](auto const &r) { return r.status == s; });
}

} // namespace liehopf
