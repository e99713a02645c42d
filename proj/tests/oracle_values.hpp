#pragma once
// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits). Do not edit.

namespace oracle {

struct KX { int k; double x; double value; };
struct Gegen { int m; double alpha; double x; double value; };
struct Zero { int k; int i; double value; };
struct Forward { int n; int m; double t; double value; };

inline constexpr KX raw_j[] = {
    {0, 0.3, 0.98506735553779858368},
    {0, 1.0, 0.84147098480789650665},
    {0, 2.5, 0.23938885764158259762},
    {0, 7.0, 0.093855228388398441485},
    {0, 20.0, 0.045647262536381382719},
    {0, 50.0, -0.0052474970740785757183},
    {1, 0.3, -0.3303429601354729338},
    {1, 1.0, -0.30116867893975678925},
    {1, 2.5, -0.16648519571016260999},
    {1, 7.0, 0.013470347468467473401},
    {1, 20.0, 0.00090608699819252650836},
    {1, 50.0, 0.00038808541022647673991},
    {2, 0.3, 0.066239165206891307985},
    {2, 1.0, 0.062035052011373861102},
    {2, 2.5, 0.041610676718224837177},
    {2, 7.0, -0.0027401279753836910549},
    {2, 20.0, -0.00012091380882739740561},
    {2, 50.0, 1.6332963373596581994e-6},
    {3, 0.3, -0.0094762877664845125027},
    {3, 1.0, -0.0090065811171125162594},
    {3, 2.5, -0.0066509100609538521429},
    {3, 7.0, 4.6998450704282014942e-6},
    {3, 20.0, -7.5379488513884870078e-7},
    {3, 50.0, -1.5850075676531001236e-7},
    {5, 0.3, -0.000095867594927120482886},
    {5, 1.0, -0.000092561158611258163567},
    {5, 2.5, -0.000075342220674753907593},
    {5, 7.0, -0.000010243795896487807027},
    {5, 20.0, -5.2137212697174039895e-9},
    {5, 50.0, 6.4154561803727587828e-11},
    {8, 0.3, 2.8950979735940029907e-8},
    {8, 1.0, 2.8264988022147294315e-8},
    {8, 2.5, 2.458620905620088417e-8},
    {8, 7.0, 7.2751032207637078957e-9},
    {8, 20.0, 3.3802026707749406493e-13},
    {8, 50.0, 2.2716797717062422355e-16},
};
inline constexpr KX raw_y[] = {
    {0, 0.3, 3.1844549637520200655},
    {0, 1.0, 0.5403023058681397174},
    {0, 2.5, -0.32045744621877348593},
    {0, 7.0, 0.10770032204904351973},
    {0, 20.0, 0.020404103090669599303},
    {0, 50.0, 0.019299320569842265481},
    {1, 0.3, -38.666390782370662673},
    {1, 1.0, -1.3817732906760362241},
    {1, 2.5, -0.044482351661629281299},
    {1, 7.0, -0.015605855525874134901},
    {1, 20.0, -0.0023333733845457431342},
    {1, 50.0, 0.000097230213253634608173},
    {2, 0.3, 1253.496859815110755},
    {2, 1.0, 3.6050175661599689548},
    {2, 2.5, 0.072624720192585812773},
    {2, 7.0, -0.0012425052137024717354},
    {2, 20.0, -0.000033509957342580924751},
    {2, 50.0, -7.8364044838412677224e-6},
    {3, 0.3, -69209.087869924256806},
    {3, 1.0, -16.64331454012380855},
    {3, 2.5, -0.05098259988820796521},
    {3, 7.0, 0.00044527309376298966485},
    {3, 20.0, 6.2523079281466193949e-6},
    {3, 50.0, -2.3219276333771307825e-8},
    {5, 0.3, -536131141.5010616048},
    {5, 1.0, -999.44034339223640949},
    {5, 2.5, -0.057334785585216760595},
    {5, 7.0, -2.0611093755270263683e-6},
    {5, 20.0, -1.5053858674178994118e-8},
    {5, 50.0, -2.2307622286673171732e-12},
    {8, 0.3, 1574348806039257.3882},
    {8, 1.0, 2095911.8399104958537},
    {8, 2.5, 0.43041487813075417325},
    {8, 7.0, 6.2730600356080378574e-8},
    {8, 20.0, -2.0238422642109510873e-12},
    {8, 50.0, 4.6302768535532317695e-16},
};
inline constexpr Zero zeros[] = {
    {0, 1, 3.1415926535897932385},
    {0, 2, 6.2831853071795864769},
    {0, 3, 9.4247779607693797154},
    {0, 4, 12.566370614359172954},
    {0, 5, 15.707963267948966192},
    {1, 1, 4.4934094579090641753},
    {1, 2, 7.7252518369377071642},
    {1, 3, 10.904121659428899827},
    {1, 4, 14.06619391283147348},
    {1, 5, 17.22075527193076874},
    {2, 1, 5.7634591968945497914},
    {2, 2, 9.0950113304763551563},
    {2, 3, 12.322940970566582052},
    {2, 4, 15.51460301088674823},
    {2, 5, 18.689036355362822202},
    {3, 1, 6.987932000500519959},
    {3, 2, 10.417118547379364763},
    {3, 3, 13.698023153249249},
    {3, 4, 16.923621285213839579},
    {3, 5, 20.121806174453818286},
};
inline constexpr Gegen gegenbauer[] = {
    {0, 0.5, 0.3, 1.0},
    {1, 0.5, 0.3, 0.2999999999999999889},
    {2, 0.5, -0.7, 0.23499999999999990674},
    {3, 1.5, 0.25, -1.6015625},
    {4, 1.5, 0.9, 6.4464375000000015003},
    {5, 2.5, -0.4, -1.1138399999999988636},
};
inline constexpr double omega[] = {  // n = 2..9
    6.2831853071795864769, 12.566370614359172954, 19.739208802178717238, 26.318945069571622984, 31.006276680299820175, 33.073361792319808187, 32.469697011334145745, 29.686580124648361824,
};
// g for the bump (center 0.5, width 0.3); m > 0 is the single-harmonic mean
inline constexpr Forward forward_bump[] = {
    {3, 0, 0.35, 0.016137166748965048371},
    {3, 0, 0.75, 0.044333788625392708002},
    {3, 0, 1.0, 0.033299536212605957837},
    {3, 0, 1.4, 0.019977833830147774371},
    {5, 0, 0.35, 0.0036080143881191314648},
    {5, 0, 0.75, 0.01844196027705289789},
    {5, 0, 1.0, 0.013368199485901980526},
    {5, 0, 1.4, 0.0033948842003891155141},
    {7, 0, 0.35, 0.00098217983661837175344},
    {7, 0, 0.75, 0.0079037491716896540276},
    {7, 0, 1.0, 0.0051267963607690118862},
    {7, 0, 1.4, 0.0006568376378932405977},
    {9, 0, 0.35, 0.00029703469488673825641},
    {9, 0, 0.75, 0.0035418946026886114944},
    {9, 0, 1.0, 0.0020146827758565186247},
    {9, 0, 1.4, 0.00013694698025864524251},
    {3, 1, 0.35, 0.015839747673244615841},
    {3, 1, 0.75, 0.031089142164548590798},
    {3, 1, 1.0, 0.0087987440212340734766},
    {3, 1, 1.4, -0.011855983504137908657},
    {3, 2, 0.35, 0.015256247550389713337},
    {3, 2, 0.75, 0.010748853425225038986},
    {3, 2, 1.0, -0.012994844122278263352},
    {3, 2, 1.4, 0.0016349765994811442982},
    {5, 1, 0.35, 0.0035138178955361831549},
    {5, 1, 0.75, 0.012516192351465956811},
    {5, 1, 1.0, 0.0038274403772182003224},
    {5, 1, 1.4, -0.0016330493889130243737},
};

}  // namespace oracle
