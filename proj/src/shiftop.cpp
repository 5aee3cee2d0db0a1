#include <set>
#include "dynstab/shiftop.hpp"

#include <sstream>

namespace dynstab {

ShiftOp::ShiftOp(VarTablePtr vt, int slots) : vt_(std::move(vt)), slots_(slots) {}

ShiftOp ShiftOp::identity(const VarTablePtr& vt, int slots) {
    ShiftOp op(vt, slots);
    op.blocks_.emplace(0, DynOperator::identity(vt, slots));
    return op;
}

ShiftOp ShiftOp::single(int m, DynOperator block) {
    ShiftOp op(block.table(), block.slots());
    if (!block.is_zero()) op.blocks_.emplace(m, std::move(block));
    return op;
}

DynOperator ShiftOp::block(int m) const {
    auto it = blocks_.find(m);
    return it == blocks_.end() ? DynOperator(vt_, slots_) : it->second;
}

void ShiftOp::add_block(int m, const DynOperator& op) {
    auto it = blocks_.find(m);
    if (it == blocks_.end()) {
        if (!op.is_zero()) blocks_.emplace(m, op);
        return;
    }
    it->second = it->second + op;
    if (it->second.is_zero()) blocks_.erase(it);
}

TensorVector ShiftOp::apply(const TensorVector& zeta) const {
    TensorVector out(vt_, slots_);
    for (const auto& [m, op] : blocks_) out = out + op.apply(zeta.shift_lambda(m));
    return out;
}

ShiftOp ShiftOp::compose(const ShiftOp& rhs) const {
    ShiftOp out(vt_, slots_);
    for (const auto& [m, a] : blocks_)
        for (const auto& [mp, b] : rhs.blocks_)
            out.add_block(m + mp, a.compose(b.shift_lambda(m)));
    return out;
}

ShiftOp ShiftOp::operator+(const ShiftOp& o) const {
    ShiftOp out = *this;
    for (const auto& [m, op] : o.blocks_) out.add_block(m, op);
    return out;
}

ShiftOp ShiftOp::operator-(const ShiftOp& o) const {
    ShiftOp out = *this;
    for (const auto& [m, op] : o.blocks_) out.add_block(m, op.scaled(RatF::constant(vt_, -1)));
    return out;
}

ShiftOp ShiftOp::scaled(const RatF& s) const {
    ShiftOp out(vt_, slots_);
    for (const auto& [m, op] : blocks_) {
        DynOperator so = op.scaled(s);
        if (!so.is_zero()) out.blocks_.emplace(m, std::move(so));
    }
    return out;
}

ShiftOp ShiftOp::scaled_by_weight(const std::function<RatF(int)>& s) const {
    ShiftOp out(vt_, slots_);
    for (const auto& [m, op] : blocks_) {
        DynOperator so = op.scaled_by_weight(s);
        if (!so.is_zero()) out.blocks_.emplace(m, std::move(so));
    }
    return out;
}

ShiftOp ShiftOp::substitute_poly(const std::map<int, Poly>& bindings) const {
    ShiftOp out(vt_, slots_);
    for (const auto& [m, op] : blocks_) {
        DynOperator so = op.substitute_poly(bindings);
        if (!so.is_zero()) out.blocks_.emplace(m, std::move(so));
    }
    return out;
}

bool ShiftOp::equals(const ShiftOp& o) const {
    if (slots_ != o.slots_) return false;
    std::set<int> ms;
    for (const auto& [m, op] : blocks_) ms.insert(m);
    for (const auto& [m, op] : o.blocks_) ms.insert(m);
    for (int m : ms)
        if (!block(m).equals(o.block(m))) return false;
    return true;
}

bool ShiftOp::is_zero() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const auto& kv) { return kv.second.is_zero(); });
}

std::string ShiftOp::str() const {
    if (blocks_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, op] : blocks_) {
        if (!first) os << "+\n";
        first = false;
        os << op.str();
        if (m != 0) os << "* delta^" << m << "\n";
    }
    return os.str();
}

}  // namespace dynstab
