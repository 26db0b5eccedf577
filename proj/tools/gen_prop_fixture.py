#!/usr/bin/env python3
"""Writes data/prop_10x7_synthetic.dat, a manufacturer-style (APC PER3 layout)
performance table for a 10x7 thin-electric propeller.

Thrust is taken from the default thrust surrogate so the fixture and the shipped
thrust model describe the same rotor. Shaft power comes from momentum theory with
a profile-power term:

    P = k T (Vp + v_i) + (sigma Cd0 / 8) rho A (Omega R)^3
    v_i = -Vp/2 + sqrt((Vp/2)^2 + T / (2 rho A))

with induced-power factor k = 1.5 and sigma * Cd0 = 0.1 * 0.06, which puts the
static power coefficient near 0.057 (typical of a 10x7 electric prop). Values are
rounded to the printed precision of the real tables.
"""
import argparse
import math

RHO = 1.225
DIAMETER = 0.254  # m (10 in)
INDUCED_FACTOR = 1.5
SOLIDITY = 0.1
PROFILE_CD = 0.06

MPH = 0.44704
LBF = 4.4482216
IN_LBF = 0.1129848
HP = 745.7


def thrust(rpm, vp):
    return (9.397e-2 + 1.652e-3 * vp - 4.175e-5 * rpm - 7.915e-4 * vp * vp
            - 1.159e-5 * vp * rpm + 1.498e-7 * rpm * rpm)


def shaft_power(rpm, vp, t):
    radius = DIAMETER / 2
    area = math.pi * radius * radius
    omega = 2 * math.pi * rpm / 60
    vi = -vp / 2 + math.sqrt((vp / 2) ** 2 + t / (2 * RHO * area))
    profile = SOLIDITY * PROFILE_CD / 8 * RHO * area * (omega * radius) ** 3
    return INDUCED_FACTOR * t * (vp + vi) + profile


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    args = ap.parse_args()
    lines = ["         10x7-synthetic.dat  (10x7 thin electric, momentum-theory torque)", ""]
    for rpm in range(2000, 10001, 500):
        lines += ["       " + "=" * 104, "",
                  f"                                                     PROP RPM = {rpm:8d}", "",
                  "    V          J           Pe          Ct          Cp         PWR         Torque        Thrust      THR/PWR",
                  "   (mph)     (Adv_Ratio)    -           -           -         (Hp)       (In-Lbf)       (Lbf)       (g/W)"]
        n = rpm / 60
        for step in range(0, 23):
            v_mph = 2.0 * step
            vp = v_mph * MPH
            t = thrust(rpm, vp)
            if t <= 0:
                break
            p = shaft_power(rpm, vp, t)
            omega = 2 * math.pi * n
            j = vp / (n * DIAMETER)
            ct = t / (RHO * n * n * DIAMETER ** 4)
            cp = p / (RHO * n ** 3 * DIAMETER ** 5)
            pe = j * ct / cp
            g_per_w = t / 9.80665 * 1000 / p
            lines.append(f"{v_mph:7.2f}{j:13.4f}{pe:12.4f}{ct:12.4f}{cp:12.4f}{p / HP:12.4f}"
                         f"{p / omega / IN_LBF:14.4f}{t / LBF:14.4f}{g_per_w:12.2f}")
        lines.append("")
    with open(args.out, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
