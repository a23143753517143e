#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liehopf {

enum class Status { Pass, Fail, Skip };

std::string_view to_string(Status s);

struct CheckRecord
{
	std::string name;
	Status status = Status::Pass;
	std::string witness;
};

/// Record for a predicate: Pass when `ok`, otherwise Fail with the witness.
CheckRecord make_record(std::string name, bool ok, std::string witness = {});

struct Report
{
	std::uint64_t seed = 0;
	std::vector<CheckRecord> records;

	void add(CheckRecord r) { records.push_back(std::move(r)); }
	void append(std::vector<CheckRecord> rs, std::string_view prefix = {});
	/// Sorts records by name.
	void sort();
	std::size_t count(Status s) const;
	bool ok() const { return count(Status::Fail) == 0; }
};

} // namespace liehopf
