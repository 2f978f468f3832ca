#pragma once
// Generated cusp-chart eikonal Hamiltonian and characteristic right-hand sides.
// Coordinates (U, v, w) with U = u/R, R = sqrt(u^2+v^2+ell^2); rho = e^w U.
// F := (|dU/U + p|^2_{g_ell^{-1}} - 1)/U, smooth at U=0 with dF/dpU|_{U=0} = 2.
// Valid for 0 <= U < 1 and R > 0; all terms singular at R = 0 carry p_w.

#include <cmath>

namespace renvol::detail {

struct HjGrad {
    double F;
    double F_pU, F_pv, F_pw;
    double F_U, F_v;
};

struct HjFaceRhs {
    double F, F_pU, F_pv, F_U, F_v;
};

inline HjGrad hj_eval(double U, double v, double pU, double pv, double pw, double ell, double nu) {
    const double x0 = std::pow(ell, 2);
    const double x1 = std::pow(v, 2);
    const double x2 = -x1;
    const double x3 = std::pow(U, 2);
    const double x4 = x0*x3;
    const double x5 = x1*x3;
    const double x6 = std::pow(pw, 2);
    const double x7 = 2*x0;
    const double x8 = U*x7;
    const double x9 = U*x1;
    const double x10 = pU*x7;
    const double x11 = 2*pU;
    const double x12 = nu*pw;
    const double x13 = 2*U;
    const double x14 = v*x13;
    const double x15 = std::pow(U, 3);
    const double x16 = x1*x15;
    const double x17 = std::pow(U, 5);
    const double x18 = std::pow(v, 3);
    const double x19 = pv*x18;
    const double x20 = 2*x19;
    const double x21 = U*x20;
    const double x22 = 3*x0;
    const double x23 = 2*x15;
    const double x24 = x0*x17;
    const double x25 = std::pow(pU, 2);
    const double x26 = x0*x25;
    const double x27 = std::pow(ell, 4);
    const double x28 = std::pow(pv, 2);
    const double x29 = x27*x28;
    const double x30 = U*x29;
    const double x31 = std::pow(nu, 2);
    const double x32 = x31*x9;
    const double x33 = std::pow(v, 4);
    const double x34 = x28*x33;
    const double x35 = U*x34;
    const double x36 = pv*x0;
    const double x37 = 4*x15;
    const double x38 = v*x12;
    const double x39 = 2*v;
    const double x40 = x12*x39;
    const double x41 = 6*pU;
    const double x42 = 4*pU;
    const double x43 = std::pow(U, 4);
    const double x44 = x0*x43;
    const double x45 = x41*x44;
    const double x46 = x1*x43;
    const double x47 = std::pow(U, 6);
    const double x48 = x12*x36;
    const double x49 = 2*x12;
    const double x50 = v*x3;
    const double x51 = x12*x50;
    const double x52 = x12*x43;
    const double x53 = v*x52;
    const double x54 = x38*x47;
    const double x55 = x1*x31;
    const double x56 = x17*x55;
    const double x57 = x1*x25;
    const double x58 = x19*x3;
    const double x59 = 2*x16;
    const double x60 = 3*x25;
    const double x61 = std::pow(U, 7);
    const double x62 = v*x31;
    const double x63 = 2*x62;
    const double x64 = x36*x63;
    const double x65 = v*x4;
    const double x66 = pv*x65;
    const double x67 = 6*x15;
    const double x68 = x36*x67;
    const double x69 = pv*x12;
    const double x70 = v*x44;
    const double x71 = pv*x70;
    const double x72 = 4*pv;
    const double x73 = x24*x72;
    const double x74 = 4*x17;
    const double x75 = pv*x1;
    const double x76 = x12*x75;
    const double x77 = x28*x7;
    const double x78 = x31*x5;
    const double x79 = x19*x31;
    const double x80 = x31*x46;
    const double x81 = x47*x55;
    const double x82 = x16*x31;
    const double x83 = x55*x61;
    const double x84 = x31*x58;
    const double x85 = x43*x79;
    const double x86 = x42*x47;
    const double x87 = x29*x31;
    const double x88 = x31*x34;
    const double x89 = 2*x25;
    const double x90 = pv*x4;
    const double x91 = x62*x90;
    const double x92 = pv*x62;
    const double x93 = x36*x62;
    const double x94 = 8*x28;
    const double x95 = pU*x9;
    const double x96 = U*pU;
    const double x97 = x0*x96;
    const double x98 = pU*x24;
    const double x99 = pU*x16;
    const double x100 = x10*x15;
    const double x101 = x31*x99;
    const double x102 = pU*x56;
    const double x103 = x20*x43;
    const double x104 = 2*x4;
    const double x105 = x0 + x1;
    const double x106 = -x104 + x105 + x44;
    const double x107 = 2/x105;
    const double x108 = v*x96;
    const double x109 = pU*x15;
    const double x110 = v*x109;
    const double x111 = 3*x3;
    const double x112 = x62*x96;
    const double x113 = x31*x36;
    const double x114 = x31*x75;
    const double x115 = 3*x109;
    const double x116 = x11*x17;
    const double x117 = 4*x43;
    const double x118 = nu*v;
    const double x119 = nu*pv;
    const double x120 = 2*x5;
    const double x121 = 4*x108;
    const double x122 = 8*x44;
    const double x123 = 3*x47;
    const double x124 = 4*x96;
    const double x125 = 24*x109;
    const double x126 = x17*x42;
    const double x127 = 8*pU;
    const double x128 = x127*x61;
    const double x129 = 16*x12;
    const double x130 = pU*x17;
    const double x131 = x29*x3;
    const double x132 = x25*x4;
    const double x133 = 5*x25;
    const double x134 = x25*x44;
    const double x135 = x26*x47;
    const double x136 = std::pow(U, 8);
    const double x137 = x1*x7;
    const double x138 = x12*x44;
    const double x139 = 26*pv;
    const double x140 = 12*x47;
    const double x141 = x44*x62;
    const double x142 = 16*pU*x61;
    const double x143 = x5*x7;
    const double x144 = 11*x3;
    const double x145 = 24*x43;
    const double x146 = x0*x28;
    const double x147 = x27*x3;
    const double x148 = x3*x33;
    const double x149 = v*x0;
    const double x150 = pv*x27;
    const double x151 = pv*x33;
    const double x152 = v*x6;
    const double x153 = x1*x12;
    const double x154 = std::pow(v, 5)*x28;
    const double x155 = pv*x147;
    const double x156 = pv*x148;
    const double x157 = x0*x62;
    const double x158 = x150*x31;
    const double x159 = x151*x31;
    const double x160 = pU*x8;
    const double x161 = x154*x31;
    const double x162 = 4*x109;
    const double x163 = x11*x24;
    const double x164 = x18*x77;
    const double x165 = x29*x62;
    const double x166 = x11*x36;
    const double x167 = x11*x16;
    const double x168 = 3*x31;
    const double x169 = 2*x43;
    const double x170 = 4*x114;
    const double x171 = x18*x31;
    const double out_F = -(U*x26 + U*x6 + U*x64 - pv*x49*x9 + v*x23*x36 - x0*x82*x94 + x1*x11 - x10*x47 + x10 + x11*x19*x43 + x11*x46 - x11*x51 - x11*x54 - x11*x58 - x11*x66 + x11*x71 + x11*x78 + x11*x81 + x11*x84 + x11*x91 - x12*x14 + x12*x68 - x12*x73 - x13*x48 - x14*x36 + x15*x22 - 3*x15*x26 + 6*x16*x69 + x16 - x17*x40 + x17*x57 + x17*x6 + x19*x23 + x21*x31 - x21 - x23*x6 + x24*x55*x94 + x24*x60 - x24 - x25*x59 + x25*x82 + x25*x83 + x25*x9 - x26*x61 + x30*x31 + x30 + x31*x35 - x31*x59 + x32*x77 + x32 + x35 + x37*x38 - x37*x87 - x37*x88 - x4*x41 - x41*x85 - x42*x5 + x42*x53 - x42*x80 - x45*x92 + x45 - x56*x89 + x56 - x62*x68 + x62*x73 - x67*x79 - x74*x76 + x74*x79 + x74*x87 + x74*x88 + x77*x9 + x79*x86 - x8 + x86*x93 - x9)/(-x0 + x2 + x4 + x5);
    const double out_F_pU = x107*(-pv*x44*x63 - x100 + x101 - x102 - x103*x31 + x106 - x5 - x51 + x53 - x58 - x66 + x78 - x80 + x84 + x91 + x95 + x97 + x98 - x99);
    const double out_F_pv = -x13*(-v - x108 + x110 + x111*x12 - x111*x62 + x112 + x113 + x114*x117 + x114 - x115*x62 + x116*x62 - x12 + x31*x44*x72 - 4*x31*x90 + x36 + x43*x63 + x50 - 2*x52 + x62 - x72*x78 + x75)/(x3 - 1);
    const double out_F_pw = U*x107*(-nu*x36 + nu*x50 - nu*x75 - pw*x3 + pw + x104*x119 + x109*x118 - x118*x96 - x118 + x119*x120);
    const double out_F_U = (-v*x72*x98 + x0*x125 + x0*x128 - x1*x126 - 16*x101 + 20*x102 - x103 + 8*x109*x19 + x110*x129 + 8*x110*x36 + 4*x112*x36 - x12*x121 + x120 - x121*x36 - x122 - x123*x55 - x123*x57 - x123*x6 - x124*x19 + x124*x79 - x125*x79 - x125*x93 - x126*x19 - x127*x83 + x128*x38 + x129*x90 - 20*x130*x38 + 36*x130*x79 + x131 - 8*x132 - x133*x136*x55 - x133*x5 + 18*x134 - 16*x135 + 5*x136*x26 + x137*x28 - x138*x139 + x139*x141 + x140*x48 + x140*x76 - x140*x79 - x140*x87 - x140*x88 - x140*x93 - x142*x79 - x142*x93 + x143*x28 - x144*x87 - x144*x88 + x145*x87 + x145*x88 - 22*x146*x78 - 24*x146*x81 + x2 + x20*x31 - x20 + x22*x47 + 7*x25*x46 - 11*x25*x80 + 13*x25*x81 + x26 + 48*x28*x44*x55 + x29 + x3*x34 - 5*x3*x6 + x32*x42 + x34 - x36*x39 - x36*x49 + 7*x4 - x40 + 7*x43*x6 - x46 - x49*x75 + 16*x5*x69 + 10*x51 - 26*x52*x75 - 14*x53 + 6*x54 + x55*x77 + x55 + x57 + 4*x58 + x6 + x60*x78 + x64 + 4*x66 - x7 - 2*x71 - 5*x78 + 7*x80 - 16*x84 + 26*x85 + x87 + x88 - 16*x91 + 36*x92*x98 - 4*x95 - 8*x97 - 24*x98 + 8*x99)/(x106 - x120 + x46);
    const double out_F_v = -x13*(-v*x104 + v*x135 + v*x160 + v*x163 + v*x29 - x0*x12 + x100*x12 + x104*x12 - x104*x62 + x109*x150 + x109*x151 - 6*x113*x99 + x114*x7 - x115*x158 - x115*x159 + x116*x158 + x116*x159 + x117*x161 + x117*x165 - x12*x120 - x12*x167 + x12*x46 + x12*x95 - x12*x97 - x12*x98 + x120*x36 + x122*x171*x28 + x130*x153 - 4*x131*x62 + x132*x62 - x134*x63 + x135*x62 - x138 + x141 - x149*x162 + x149 - x150*x96 - x150 - x151*x96 - x151 - x152*x43 - x152 + x153 + x154 - x155*x168 + x155 - x156*x168 + x156 - x157*x162 + x157 + x158*x169 + x158*x96 + x158 + x159*x169 + x159*x96 + x159 + x160*x62 - 4*x161*x3 + x161 + x163*x62 + x164*x31 + x164 + x165 + x166*x32 - x166*x9 + x167*x36 + x170*x44 + x170*x98 - x171*x4*x94 + x25*x65 - 6*x36*x78 + 2*x50*x6 - x7*x75 - x70*x89 + x70)/(-x137 + x143 + x147 + x148 - x27 - x33);
    return {out_F, out_F_pU, out_F_pv, out_F_pw, out_F_U, out_F_v};
}

// v = 0, ell = 0, p_w = 0 face system (one-sided limit v -> 0+).
inline HjFaceRhs hj_eval_face(double U, double pU, double pv, double nu) {
    const double x0 = std::pow(nu, 2);
    const double x1 = std::pow(pU, 2);
    const double x2 = std::pow(U, 2);
    const double x3 = 2*pU;
    const double x4 = std::pow(U, 3);
    const double x5 = x0*x4;
    const double x6 = std::pow(U, 4)*x0;
    const double x7 = std::pow(U, 5)*x0;
    const double x8 = x0*x2;
    const double x9 = U*pU;
    const double x10 = 1 - x0;
    const double out_F = U*x0 + U*x1 - U + 2*pU*x0*x2 + 2*pU + x0*x1*x4 - x1*x4 - x1*x7 - x2*x3 - x3*x6 - x5;
    const double out_F_pU = 2*U*pU + 2*pU*x0*x4 - 2*pU*x4 - 2*pU*x7 + 2*x0*x2 - 2*x2 - 2*x6 + 2;
    const double out_F_pv = 0;
    const double out_F_U = 4*U*pU*x0 - 8*pU*x5 + 3*x0*x1*x2 - 3*x1*x2 - 5*x1*x6 + x1 - x10 - 3*x8 - 4*x9;
    const double out_F_v = -2*U*pv*(-U*pU*x0 + x10 + x3*x5 + 2*x8 + x9);
    return {out_F, out_F_pU, out_F_pv, out_F_U, out_F_v};
}

} // namespace renvol::detail
