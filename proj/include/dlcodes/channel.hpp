#pragma once

#include <string>

#include "errors.hpp"

namespace dlcodes {

enum class ChannelKind { DelTrans, Asymmetric, Block, Damerau };

inline std::string to_string(ChannelKind k) {
    switch (k) {
        case ChannelKind::DelTrans: return "del-trans";
        case ChannelKind::Asymmetric: return "asymmetric";
        case ChannelKind::Block: return "block";
        case ChannelKind::Damerau: return "damerau";
    }
    return "?";
}

// Which error model applies and with which counts.  Unused fields stay 0.
struct ChannelSpec {
    ChannelKind kind = ChannelKind::DelTrans;
    int s = 0;        // deletions (del-trans, asymmetric) / block deletions
    int t = 0;        // transpositions (del-trans) / block transpositions
    int t_plus = 0;   // 0-right shifts (asymmetric)
    int t_minus = 0;  // 0-left shifts (asymmetric)
    int b = 1;        // block length (block)
    int s_del = 0, s_ins = 0, t_trans = 0, t_sub = 0;  // damerau

    static ChannelSpec del_trans(int s, int t) {
        ChannelSpec c;
        c.kind = ChannelKind::DelTrans;
        c.s = s;
        c.t = t;
        return c;
    }
    static ChannelSpec asymmetric(int s, int t_plus, int t_minus) {
        ChannelSpec c;
        c.kind = ChannelKind::Asymmetric;
        c.s = s;
        c.t_plus = t_plus;
        c.t_minus = t_minus;
        return c;
    }
    static ChannelSpec block(int s, int t, int b) {
        ChannelSpec c;
        c.kind = ChannelKind::Block;
        c.s = s;
        c.t = t;
        c.b = b;
        return c;
    }
    static ChannelSpec damerau(int s_del, int s_ins, int t_trans, int t_sub) {
        ChannelSpec c;
        c.kind = ChannelKind::Damerau;
        c.s_del = s_del;
        c.s_ins = s_ins;
        c.t_trans = t_trans;
        c.t_sub = t_sub;
        return c;
    }

    int member_length(int n) const {
        switch (kind) {
            case ChannelKind::DelTrans: return n - s;
            case ChannelKind::Asymmetric: return n - s;
            case ChannelKind::Block: return n - s * b;
            case ChannelKind::Damerau: return n - s_del + s_ins;
        }
        return n;
    }

    void validate(int n, int q) const {
        auto nonneg = [](int v, const char* name) {
            if (v < 0) throw precondition_error(std::string(name) + " must be non-negative");
        };
        switch (kind) {
            case ChannelKind::DelTrans:
                nonneg(s, "s");
                nonneg(t, "t");
                if (s > n) throw precondition_error("s exceeds sequence length");
                break;
            case ChannelKind::Asymmetric:
                nonneg(s, "s");
                nonneg(t_plus, "t+");
                nonneg(t_minus, "t-");
                if (q != 2) throw precondition_error("asymmetric channel requires q = 2");
                if (s > n) throw precondition_error("s exceeds sequence length");
                break;
            case ChannelKind::Block:
                nonneg(s, "s");
                nonneg(t, "t");
                if (b < 1) throw precondition_error("block length must be >= 1");
                // Two extra blocks of room are needed only when a block
                // transposition must fit after the deletions.
                if (n < (s + (t > 0 ? 2 : 0)) * b)
                    throw precondition_error(t > 0 ? "block channel requires n >= (s+2)b"
                                                   : "block channel requires n >= sb");
                break;
            case ChannelKind::Damerau:
                nonneg(s_del, "s_D");
                nonneg(s_ins, "s_I");
                nonneg(t_trans, "t_T");
                nonneg(t_sub, "t_S");
                if (s_del > n) throw precondition_error("s_D exceeds sequence length");
                break;
        }
    }
};

inline bool operator==(const ChannelSpec& a, const ChannelSpec& b) {
    return a.kind == b.kind && a.s == b.s && a.t == b.t && a.t_plus == b.t_plus &&
           a.t_minus == b.t_minus && a.b == b.b && a.s_del == b.s_del && a.s_ins == b.s_ins &&
           a.t_trans == b.t_trans && a.t_sub == b.t_sub;
}

} // namespace dlcodes
