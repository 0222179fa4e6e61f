#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "blockscope/cyclotomic.hpp"
#include "blockscope/permgroup.hpp"

namespace blockscope {

struct ClassData {
    u64 size = 1;
    u64 element_order = 1;
    // class index of x^q for each prime q dividing the group exponent
    std::vector<std::pair<u64, u32>> power_maps;
};

// Ordinary character table.  Rows are canonically ordered: the trivial
// character first, the rest ascending by (degree, values compared column by
// column).  Classes follow the canonical conjugacy class order of the group
// they came from.  Construction runs full validation: degrees are positive
// integers dividing the order with squares summing to it, and both row and
// column orthogonality hold exactly.
class CharacterTable {
public:
    static CharacterTable build(std::string name, u64 order, u64 exponent,
                                std::vector<ClassData> classes,
                                std::vector<std::vector<Cyclotomic>> rows);

    const std::string& group_name() const { return name_; }
    u64 order() const { return order_; }
    u64 exponent() const { return exponent_; }
    u32 class_count() const { return static_cast<u32>(classes_.size()); }
    const std::vector<ClassData>& classes() const { return classes_; }
    const ClassData& cls(u32 i) const { return classes_.at(i); }

    const std::vector<std::vector<Cyclotomic>>& rows() const { return irr_; }
    u32 row_count() const { return static_cast<u32>(irr_.size()); }
    const std::vector<Cyclotomic>& row(u32 r) const { return irr_.at(r); }
    const Cyclotomic& value(u32 r, u32 c) const { return irr_.at(r).at(c); }
    u64 degree(u32 r) const { return degrees_.at(r); }

    // <a, b> = (1/|G|) sum |K| a(K) conj(b(K)); requires a rational result.
    Rational inner_product(u32 r, u32 s) const;
    Rational inner_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const;

    std::optional<u32> find_row(const std::vector<Cyclotomic>& values) const;

    nlohmann::ordered_json to_json() const;
    static CharacterTable from_json(const nlohmann::json& j);

private:
    std::string name_;
    u64 order_ = 1;
    u64 exponent_ = 1;
    std::vector<ClassData> classes_;
    std::vector<std::vector<Cyclotomic>> irr_;
    std::vector<u64> degrees_;

    void validate() const;
};

// Dixon-Schneider: exact table from the group via one modular splitting
// field, the smallest prime l = 1 (mod exponent) with l > 2*sqrt(|G|).
CharacterTable compute_table(const PermGroup& G, const std::string& name);

CharacterTable read_table(const std::string& path);
void write_table(const CharacterTable& table, const std::string& path);

nlohmann::ordered_json cyclotomic_to_json(const Cyclotomic& v);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

}  // namespace blockscope
