//! Coefficient data for the closed-form moments.
//!
//! Univariate pieces are ratios of polynomials in r with coefficients in
//! descending powers. Bivariate pieces are sums of terms
//! `c * sqrt3^s * r^i * eps^j`. Coefficients are the published integers
//! after clearing denominators.

use super::eval::{Piece, Ratio, Ratio2, Term};

/// Null mean.
pub(super) static MU_NULL: &[Piece] = &[
    Piece { lo: 1.0, hi: 3.0 / 2.0, f: Ratio { num: &[37.0, 0.0, 0.0], den: &[216.0] } },
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[-1.0, 0.0, 32.0, -64.0, 36.0], den: &[8.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: f64::INFINITY, f: Ratio { num: &[2.0, 0.0, -3.0], den: &[2.0, 0.0, 0.0] } },
];

/// Null asymptotic variance.
pub(super) static NU_NULL: &[Piece] = &[
    Piece { lo: 1.0, hi: 4.0 / 3.0, f: Ratio { num: &[3007.0, -13824.0, 898.0, 77760.0, -117953.0, 48888.0, -24246.0, 60480.0, -38880.0, 0.0, 3888.0], den: &[58320.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 4.0 / 3.0, hi: 3.0 / 2.0, f: Ratio { num: &[5467.0, -37800.0, 61912.0, 0.0, 46588.0, -191520.0, 13608.0, 241920.0, -155520.0, 0.0, 15552.0], den: &[233280.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[-7.0, 72.0, -312.0, 0.0, 5332.0, -15072.0, -13704.0, 139264.0, -273600.0, 242176.0, -103232.0, 27648.0, -8640.0], den: &[960.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: f64::INFINITY, f: Ratio { num: &[15.0, 0.0, -11.0, -48.0, 25.0], den: &[15.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
];

/// Variance of the pair kernel.
pub(super) static OMEGA: &[Piece] = &[
    Piece { lo: 1.0, hi: 4.0 / 3.0, f: Ratio { num: &[-1369.0, -4107.0, -902.0, 78084.0, -161784.0, 182736.0, 23328.0, -155520.0, 55296.0], den: &[11664.0, 34992.0, 23328.0, 0.0, 0.0] } },
    Piece { lo: 4.0 / 3.0, hi: 3.0 / 2.0, f: Ratio { num: &[-1369.0, -4107.0, -9650.0, 98496.0, -132624.0, 79056.0, 57888.0, -72576.0], den: &[11664.0, 34992.0, 23328.0, 0.0] } },
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[-1.0, -3.0, 62.0, 0.0, -968.0, 1704.0, 1824.0, -5424.0, 1168.0, 3856.0, -2208.0], den: &[16.0, 48.0, 32.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: f64::INFINITY, f: Ratio { num: &[3.0, 3.0, 3.0, -13.0], den: &[1.0, 1.0, 0.0, 0.0, 0.0, 0.0] } },
];

/// Second derivative in eps of the segregation mean at eps = 0.
pub(super) static MU_SEG_DD: &[Piece] = &[
    Piece { lo: 1.0, hi: 3.0 / 2.0, f: Ratio { num: &[74.0, 0.0, -72.0], den: &[27.0] } },
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[-2.0, 0.0, 40.0, -64.0, 24.0], den: &[1.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: f64::INFINITY, f: Ratio { num: &[8.0, 0.0, -8.0], den: &[1.0, 0.0, 0.0] } },
];

/// Second derivative in eps of the association mean at eps = 0.
pub(super) static MU_ASSOC_DD: &[Piece] = &[
    Piece { lo: 1.0, hi: 4.0 / 3.0, f: Ratio { num: &[-22.0, 0.0, -864.0, 1728.0, -864.0], den: &[9.0, 0.0, 0.0] } },
    Piece { lo: 4.0 / 3.0, hi: 3.0 / 2.0, f: Ratio { num: &[-22.0, 0.0, -216.0, 0.0, 288.0], den: &[9.0, 0.0, 0.0] } },
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[-6.0, 0.0, 144.0, -384.0, 248.0], den: &[1.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: f64::INFINITY, f: Ratio { num: &[-40.0], den: &[1.0, 0.0, 0.0] } },
];

/// Segregation mean at eps = sqrt3/8.
pub(super) static MU_S_SQRT3_8: &[Piece] = &[
    Piece { lo: 1.0, hi: 9.0 / 8.0, f: Ratio { num: &[2287.0, 0.0, -702.0], den: &[9126.0] } },
    Piece { lo: 9.0 / 8.0, hi: 3.0 / 2.0, f: Ratio { num: &[-5905.0, 36864.0, -62910.0, 46656.0, -13122.0], den: &[9126.0, 0.0, 0.0] } },
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[61.0, -768.0, 3494.0, -5120.0, 2466.0], den: &[338.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: 3.0, f: Ratio { num: &[-3.0, 0.0, 422.0, 0.0, -606.0], den: &[338.0, 0.0, 0.0] } },
    Piece { lo: 3.0, hi: 4.0, f: Ratio { num: &[3.0, -48.0, 530.0, 0.0, -768.0], den: &[338.0, 0.0, 0.0] } },
];

/// Segregation variance at eps = sqrt3/8.
pub(super) static NU_S_SQRT3_8: &[Piece] = &[
    Piece { lo: 1.0, hi: 12.0 / 11.0, f: Ratio { num: &[9959911.0, -46006272.0, -430526.0, 258785280.0, -385799609.0, 162699264.0, -83976048.0, 201277440.0, -129392640.0, 0.0, 12939264.0], den: &[104104845.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 12.0 / 11.0, hi: 9.0 / 8.0, f: Ratio { num: &[9959911.0, -46006272.0, -430526.0, 258785280.0, -415110891.0, 272331072.0, -158725008.0, -16174080.0, 315394560.0, -310542336.0, 90574848.0], den: &[104104845.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 9.0 / 8.0, hi: 1.224744871391589, f: Ratio { num: &[3144167.0, 15335424.0, -378655166.0, 2750459904.0, -11800111467.0, 31878202752.0, -54792387144.0, 60339341664.0, -42745183272.0, 19903426272.0, -6790168926.0, 1989715104.0, -373071582.0], den: &[104104845.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 1.224744871391589, hi: 21.0 / 16.0, f: Ratio { num: &[-8177689.0, 54153216.0, -320428478.0, 2459326464.0, -11854698987.0, 32751603072.0, -55010737224.0, 59029241184.0, -42131073672.0, 20886001632.0, -7379714142.0, 1694942496.0, -170415414.0], den: &[104104845.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 21.0 / 16.0, hi: 4.0 / 3.0, f: Ratio { num: &[-8177689.0, 54153216.0, -320428478.0, 2459326464.0, -12509010411.0, 37904305536.0, -71918042184.0, 88617024864.0, -71256548232.0, 36176875776.0, -10724592861.0, 1694942496.0, -170415414.0], den: &[104104845.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 4.0 / 3.0, hi: 3.0 / 2.0, f: Ratio { num: &[-2718937.0, 39596544.0, -434455742.0, 3154811904.0, -14086429683.0, 39680803584.0, -72881433288.0, 88893062496.0, -71547681672.0, 36487418112.0, -10828106973.0, 1694942496.0, -170415414.0], den: &[104104845.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 3.0 / 2.0, hi: 1.7320508075688772, f: Ratio { num: &[-1027.0, 19968.0, -295626.0, 3265792.0, -23210081.0, 103077696.0, -289042360.0, 511170304.0, -553668600.0, 343186304.0, -109133095.0, 20431008.0, -5845554.0], den: &[428415.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 1.7320508075688772, hi: 7.0 / 4.0, f: Ratio { num: &[-637.0, 19968.0, -299370.0, 3265792.0, -23199551.0, 103077696.0, -289042360.0, 511170304.0, -553700190.0, 343186304.0, -109133095.0, 20431008.0, -5788692.0], den: &[428415.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 7.0 / 4.0, hi: 2.0, f: Ratio { num: &[-637.0, 19968.0, -299370.0, 3265792.0, -24051519.0, 112023360.0, -328179640.0, 602490624.0, -673558110.0, 427086848.0, -133604087.0, 20431008.0, -5788692.0], den: &[428415.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: 3.0, f: Ratio { num: &[130.0, -2496.0, 22134.0, -122720.0, 452225.0, -1010880.0, 1075400.0, 26624.0, -1993566.0, 5324800.0, -5083895.0, 303264.0, -37908.0], den: &[428415.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 3.0, hi: 7.0 / 2.0, f: Ratio { num: &[-330.0, 8896.0, -85445.0, 342624.0, -332000.0, -1148560.0, 1180986.0, 5324800.0, -6678947.0], den: &[428415.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 7.0 / 2.0, hi: 4.0, f: Ratio { num: &[-330.0, 8896.0, -87525.0, 360096.0, -332000.0, -1505280.0, 2117376.0, 5324800.0, -8208384.0], den: &[428415.0, 0.0, 0.0, 0.0, 0.0] } },
];

/// Segregation mean at eps = sqrt3/4.
pub(super) static MU_S_SQRT3_4: &[Piece] = &[
    Piece { lo: 1.0, hi: 3.0 / 2.0, f: Ratio { num: &[-67.0, 240.0, -162.0], den: &[54.0] } },
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[7.0, -48.0, 122.0, -128.0, 48.0], den: &[2.0, 0.0, 0.0] } },
];

/// Segregation variance at eps = sqrt3/4, as published.
pub(super) static NU_S_SQRT3_4: &[Piece] = &[
    Piece { lo: 1.0, hi: 9.0 / 8.0, f: Ratio { num: &[-14285.0, 28224.0, 233266.0, -1106688.0, 2021199.0, -1876608.0, 880794.0, -165888.0], den: &[3645.0, 0.0] } },
    Piece { lo: 9.0 / 8.0, hi: 9.0 / 7.0, f: Ratio { num: &[-14285.0, 28224.0, 233266.0, -1106688.0, 1234767.0, 3431808.0, -14049126.0, 22228992.0, -18895680.0, 8503056.0, -1594323.0], den: &[3645.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 9.0 / 7.0, hi: 4.0 / 3.0, f: Ratio { num: &[-14285.0, 28224.0, 233266.0, -1106688.0, 2545713.0, -5903280.0, 13456044.0, -20636208.0, 18305190.0, -8503056.0, 1594323.0], den: &[3645.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 4.0 / 3.0, hi: 3.0 / 2.0, f: Ratio { num: &[1909.0, -27072.0, 104920.0, -111072.0, 1992132.0, -15844032.0, 50174640.0, -81881280.0, 73220760.0, -34012224.0, 6377292.0], den: &[14580.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[-5120.0, 46176.0, -175984.0, 387680.0, -611163.0, 850240.0, -1118472.0, 1308960.0, -1331492.0, 1187904.0, -955392.0, 705536.0, -433304.0, 198144.0, -56016.0], den: &[20.0, 0.0, 0.0, 0.0, 0.0] } },
];

/// Segregation mean at eps = 2 sqrt3/7.
pub(super) static MU_S_2SQRT3_7: &[Piece] = &[
    Piece { lo: 1.0, hi: 9.0 / 7.0, f: Ratio { num: &[-241.0, 684.0, -432.0], den: &[54.0] } },
    Piece { lo: 9.0 / 7.0, hi: 3.0 / 2.0, f: Ratio { num: &[80.0, -432.0, 866.0, -756.0, 243.0], den: &[2.0, 0.0, 0.0] } },
];

/// Segregation variance at eps = 2 sqrt3/7.
pub(super) static NU_S_2SQRT3_7: &[Piece] = &[
    Piece { lo: 1.0, hi: 15.0 / 14.0, f: Ratio { num: &[-2495087.0, 5067342.0, 29145379.0, -134149248.0, 230713503.0, -202262778.0, 90317349.0, -16336404.0], den: &[14580.0, 0.0] } },
    Piece { lo: 15.0 / 14.0, hi: 15.0 / 13.0, f: Ratio { num: &[-2495087.0, 5067342.0, 29145379.0, -134149248.0, 140359071.0, 378587142.0, -1465530651.0, 2206303596.0, -1786050000.0, 765450000.0, -136687500.0], den: &[14580.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 15.0 / 13.0, hi: 7.0 / 6.0, f: Ratio { num: &[-2495087.0, 5067342.0, 29145379.0, -134149248.0, 309668679.0, -731864538.0, 1559738349.0, -2174176404.0, 1767825000.0, -765450000.0, 136687500.0], den: &[14580.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 7.0 / 6.0, hi: 5.0 / 4.0, f: Ratio { num: &[24337.0, -321426.0, 1000147.0, -654768.0, 77561559.0, -527363136.0, 1468526760.0, -2157840000.0, 1767825000.0, -765450000.0, 136687500.0], den: &[14580.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 5.0 / 4.0, hi: 9.0 / 7.0, f: Ratio { num: &[24337.0, -321426.0, 1000147.0, -654768.0, -1567017.0, 2649024.0, -1137240.0], den: &[14580.0] } },
    Piece { lo: 9.0 / 7.0, hi: 3.0 / 2.0, f: Ratio { num: &[-128.0, 2464.0, -151248.0, 1495632.0, -6802352.0, 17808546.0, -29107701.0, 30328452.0, -19644768.0, 7225848.0, -1154736.0], den: &[20.0, 0.0, 0.0, 0.0, 0.0] } },
];

/// Association mean at eps = 5 sqrt3/24.
pub(super) static MU_A_5SQRT3_24: &[Piece] = &[
    Piece { lo: 1.0, hi: 3.0, f: Ratio { num: &[2.0, 0.0, -1.0], den: &[6.0, 0.0, 0.0] } },
    Piece { lo: 3.0, hi: 4.0, f: Ratio { num: &[2.0, -16.0, 38.0, 0.0, -55.0], den: &[6.0, 0.0, 0.0] } },
    Piece { lo: 4.0, hi: f64::INFINITY, f: Ratio { num: &[6.0, 0.0, -55.0], den: &[6.0, 0.0, 0.0] } },
];

/// Association variance at eps = 5 sqrt3/24.
pub(super) static NU_A_5SQRT3_24: &[Piece] = &[
    Piece { lo: 1.0, hi: 3.0, f: Ratio { num: &[1.0, 0.0, -2.0, 0.0, 1.0], den: &[27.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 3.0, hi: 7.0 / 2.0, f: Ratio { num: &[-120.0, 2176.0, -15340.0, 50304.0, -58754.0, -74880.0, 248577.0, -138240.0, -47172.0, -23328.0, 7305.0], den: &[405.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 7.0 / 2.0, hi: 3.732050807568877, f: Ratio { num: &[-120.0, 2176.0, -15180.0, 48960.0, -58754.0, -47440.0, 176547.0, -138240.0, 70477.0, -23328.0, 7305.0], den: &[405.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 3.732050807568877, hi: 4.0, f: Ratio { num: &[10.0, -192.0, 1320.0, -2944.0, -7590.0, 49920.0, -69986.0, -46480.0, 184137.0, -143360.0, 71917.0, -23520.0, 7315.0], den: &[405.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 4.0, hi: f64::INFINITY, f: Ratio { num: &[787.0, 0.0, -7601.0, -16032.0, 9265.0], den: &[135.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
];

/// Association mean at eps = sqrt3/12.
pub(super) static MU_A_SQRT3_12: &[Piece] = &[
    Piece { lo: 1.0, hi: 2.0, f: Ratio { num: &[6.0, -16.0, 18.0, 0.0, -5.0], den: &[18.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: f64::INFINITY, f: Ratio { num: &[18.0, 0.0, -37.0], den: &[18.0, 0.0, 0.0] } },
];

/// Association variance at eps = sqrt3/12.
pub(super) static NU_A_SQRT3_12: &[Piece] = &[
    Piece { lo: 1.0, hi: 3.0 / 2.0, f: Ratio { num: &[10.0, -96.0, 240.0, 192.0, -1830.0, 3360.0, -2650.0, 240.0, 1383.0, -1280.0, 540.0, -144.0, 35.0], den: &[405.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[10.0, -96.0, 240.0, 192.0, -1670.0, 2784.0, -2650.0, 2400.0, -1047.0, -1280.0, 1269.0, -144.0, 35.0], den: &[405.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: f64::INFINITY, f: Ratio { num: &[537.0, 0.0, -683.0, -2448.0, 1315.0], den: &[405.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
];

/// Association mean at eps = sqrt3/21.
pub(super) static MU_A_SQRT3_21: &[Piece] = &[
    Piece { lo: 1.0, hi: 8.0 / 7.0, f: Ratio { num: &[7839.0, -27648.0, 49152.0, -35840.0, 9216.0], den: &[16200.0, 0.0, 0.0] } },
    Piece { lo: 8.0 / 7.0, hi: 3.0 / 2.0, f: Ratio { num: &[2719.0, -5592.0, 5760.0, 0.0, -1536.0], den: &[8100.0, 0.0, 0.0] } },
    Piece { lo: 3.0 / 2.0, hi: 12.0 / 7.0, f: Ratio { num: &[53.0, 2744.0, -7296.0, 8064.0, -3104.0], den: &[2700.0, 0.0, 0.0] } },
    Piece { lo: 12.0 / 7.0, hi: 7.0 / 4.0, f: Ratio { num: &[2719.0, 0.0, -1440.0, 0.0, 2112.0], den: &[16200.0, 0.0, 0.0] } },
    Piece { lo: 7.0 / 4.0, hi: 2.0, f: Ratio { num: &[-2401.0, 0.0, 73824.0, -153664.0, 88548.0], den: &[16200.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: f64::INFINITY, f: Ratio { num: &[54.0, 0.0, -89.0], den: &[54.0, 0.0, 0.0] } },
];

/// Association variance at eps = sqrt3/21.
pub(super) static NU_A_SQRT3_21: &[Piece] = &[
    Piece { lo: 1.0, hi: 1.0690449676496976, f: Ratio { num: &[4124031.0, -22708224.0, -389826.0, 369129408.0, -1592672721.0, 3532359672.0, -4721848374.0, 4050858048.0, -2387433568.0, 995033088.0, -209048784.0, -43352064.0, 25952256.0], den: &[65610000.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 1.0690449676496976, hi: 8.0 / 7.0, f: Ratio { num: &[6594660.0, -31178952.0, -14911074.0, 441735648.0, -1578842961.0, 3311083512.0, -4669163574.0, 4366966848.0, -2522908768.0, 778272768.0, -93443280.0, 14450688.0, -8650752.0], den: &[65610000.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 8.0 / 7.0, hi: 5.0 / 4.0, f: Ratio { num: &[826701.0, -7118748.0, 14155864.0, 18467640.0, -104968680.0, 165877272.0, -128355690.0, 27338184.0, 47304144.0, -52684800.0, 24413592.0, -7225344.0, 1966080.0], den: &[32805000.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 5.0 / 4.0, hi: 4.0 / 3.0, f: Ratio { num: &[826701.0, -7118748.0, 14155864.0, 18467640.0, 20074008.0, -671672808.0, 2194076310.0, -3382581816.0, 2840904144.0, -1262284800.0, 240413592.0, -7225344.0, 1966080.0], den: &[32805000.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 4.0 / 3.0, hi: 10.0 / 7.0, f: Ratio { num: &[826701.0, -7118748.0, 14155864.0, 18467640.0, -137116617.0, 512952192.0, -1511673690.0, 2773418184.0, -2883095856.0, 1560115200.0, -335586408.0, -7225344.0, 1966080.0], den: &[32805000.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 10.0 / 7.0, hi: 3.0 / 2.0, f: Ratio { num: &[826701.0, -7118748.0, 14155864.0, 18467640.0, -91939401.0, 125718912.0, -128697690.0, 139178184.0, -60695856.0, -52684800.0, 48413592.0, -7225344.0, 1966080.0], den: &[32805000.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 3.0 / 2.0, hi: 12.0 / 7.0, f: Ratio { num: &[226415.0, -1426740.0, 334536.0, 17196648.0, -87678147.0, 311364480.0, -711864862.0, 944809880.0, -684036240.0, 238099456.0, -24048504.0, -7633920.0, 4761088.0], den: &[10935000.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 12.0 / 7.0, hi: 7.0 / 4.0, f: Ratio { num: &[5786907.0, -42712488.0, 76274888.0, 0.0, 51865788.0, -300043296.0, 132202536.0, 171413760.0, -93614976.0, 147517440.0, -194460480.0, 67608576.0, -29061120.0], den: &[262440000.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 7.0 / 4.0, hi: 2.0, f: Ratio { num: &[-2470629.0, 25412184.0, -112001848.0, 0.0, 1958438076.0, -5449924256.0, -6150612888.0, 55820599296.0, -109663683136.0, 97335694848.0, -40552466112.0, 9825887232.0, -3078523200.0], den: &[262440000.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
    Piece { lo: 2.0, hi: f64::INFINITY, f: Ratio { num: &[493829.0, 0.0, -433645.0, -1765008.0, 929955.0], den: &[455625.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0] } },
];

/// Replacement for the last published piece of `NU_S_SQRT3_4` on [3/2, 2),
/// without its factor (r - 2)^4, which is applied at evaluation time.
/// The published numerator is not divisible by (r - 2) and goes negative;
/// this one was recovered from exact rational evaluation of the variance.
pub(super) static NU_S_SQRT3_4_PIECE5_FIX: &[Piece] = &[
    Piece { lo: 3.0 / 2.0, hi: 2.0, f: Ratio { num: &[-3.0, 40.0, -1248.0, 6144.0, -11500.0, 9312.0, -2736.0], den: &[20.0, 0.0, 0.0, 0.0, 0.0] } },
];

pub(super) static VARPI_A_1_1: Ratio2 = Ratio2 { num: &[Term(-3456.0, 0, 4, 4), Term(3072.0, 1, 4, 3), Term(-2304.0, 0, 4, 2), Term(101.0, 0, 4, 0), Term(-9216.0, 0, 3, 4), Term(3072.0, 1, 3, 3), Term(2304.0, 0, 3, 2), Term(-512.0, 1, 3, 1), Term(-256.0, 0, 3, 0), Term(17280.0, 0, 2, 4), Term(-4608.0, 1, 2, 3), Term(-6912.0, 0, 2, 2), Term(1536.0, 1, 2, 1), Term(384.0, 0, 2, 0), Term(-6144.0, 1, 1, 3), Term(11520.0, 0, 1, 2), Term(-1536.0, 1, 1, 1), Term(-256.0, 0, 1, 0), Term(-6336.0, 0, 0, 4), Term(6144.0, 1, 0, 3), Term(-5760.0, 0, 0, 2), Term(512.0, 1, 0, 1), Term(64.0, 0, 0, 0)], den: &[Term(31104.0, 0, 2, 4), Term(-5184.0, 0, 2, 2), Term(216.0, 0, 2, 0)] };

pub(super) static VARPI_A_1_2: Ratio2 = Ratio2 { num: &[Term(-1728.0, 0, 4, 4), Term(1536.0, 1, 4, 3), Term(-1152.0, 0, 4, 2), Term(37.0, 0, 4, 0), Term(31104.0, 0, 2, 4), Term(-10368.0, 0, 2, 2), Term(20736.0, 0, 1, 2), Term(-15552.0, 0, 0, 4), Term(-10368.0, 0, 0, 2)], den: &[Term(31104.0, 0, 2, 4), Term(-5184.0, 0, 2, 2), Term(216.0, 0, 2, 0)] };

pub(super) static VARPI_A_1_3: Ratio2 = Ratio2 { num: &[Term(-2592.0, 0, 4, 4), Term(-2304.0, 1, 4, 3), Term(1728.0, 0, 4, 2), Term(-15.0, 0, 4, 0), Term(-432.0, 1, 3, 1), Term(-216.0, 0, 3, 0), Term(-46656.0, 0, 2, 4), Term(9072.0, 0, 2, 2), Term(1728.0, 1, 2, 1), Term(432.0, 0, 2, 0), Term(-9216.0, 1, 1, 3), Term(-13824.0, 0, 1, 2), Term(-2304.0, 1, 1, 1), Term(-384.0, 0, 1, 0), Term(10656.0, 0, 0, 4), Term(12288.0, 1, 0, 3), Term(4032.0, 0, 0, 2), Term(1024.0, 1, 0, 1), Term(128.0, 0, 0, 0)], den: &[Term(46656.0, 0, 2, 4), Term(-7776.0, 0, 2, 2), Term(324.0, 0, 2, 0)] };

pub(super) static VARPI_A_1_4: Ratio2 = Ratio2 { num: &[Term(-1728.0, 0, 4, 4), Term(1536.0, 1, 4, 3), Term(-1152.0, 0, 4, 2), Term(37.0, 0, 4, 0), Term(31104.0, 0, 2, 4), Term(-2592.0, 0, 2, 2), Term(5184.0, 0, 0, 4), Term(3456.0, 0, 0, 2)], den: &[Term(31104.0, 0, 2, 4), Term(-5184.0, 0, 2, 2), Term(216.0, 0, 2, 0)] };

pub(super) static VARPI_A_1_5: Ratio2 = Ratio2 { num: &[Term(-9.0, 0, 4, 0), Term(10368.0, 0, 2, 4), Term(-1728.0, 0, 2, 2), Term(288.0, 0, 2, 0), Term(-576.0, 0, 1, 0), Term(1728.0, 0, 0, 4), Term(1152.0, 0, 0, 2), Term(324.0, 0, 0, 0)], den: &[Term(10368.0, 0, 2, 4), Term(-1728.0, 0, 2, 2), Term(72.0, 0, 2, 0)] };

pub(super) static VARPI_A_1_6: Ratio2 = Ratio2 { num: &[Term(-9.0, 0, 4, 0), Term(216.0, 0, 2, 0), Term(-576.0, 0, 1, 0), Term(432.0, 0, 0, 0)], den: &[Term(10368.0, 0, 2, 4), Term(-1728.0, 0, 2, 2), Term(72.0, 0, 2, 0)] };

pub(super) static VARPI_A_2_2: Ratio2 = Ratio2 { num: &[Term(-5184.0, 0, 4, 4), Term(4608.0, 1, 4, 3), Term(-3456.0, 0, 4, 2), Term(111.0, 0, 4, 0), Term(-13824.0, 0, 3, 4), Term(4608.0, 1, 3, 3), Term(3456.0, 0, 3, 2), Term(-336.0, 1, 3, 1), Term(-168.0, 0, 3, 0), Term(25920.0, 0, 2, 4), Term(-6912.0, 1, 2, 3), Term(-3888.0, 0, 2, 2), Term(576.0, 1, 2, 1), Term(144.0, 0, 2, 0), Term(3168.0, 0, 0, 4), Term(-3072.0, 1, 0, 3), Term(2880.0, 0, 0, 2), Term(-256.0, 1, 0, 1), Term(-32.0, 0, 0, 0)], den: &[Term(46656.0, 0, 2, 4), Term(-7776.0, 0, 2, 2), Term(324.0, 0, 2, 0)] };

pub(super) static VARPI_A_3_1: Ratio2 = Ratio2 { num: &[Term(2.0, 0, 2, 0), Term(-1.0, 0, 0, 0)], den: &[Term(6.0, 0, 2, 0)] };

pub(super) static VARPI_A_3_2: Ratio2 = Ratio2 { num: &[Term(432.0, 0, 4, 4), Term(-576.0, 1, 4, 3), Term(864.0, 0, 4, 2), Term(-192.0, 1, 4, 1), Term(48.0, 0, 4, 0), Term(1152.0, 0, 3, 4), Term(-960.0, 1, 3, 3), Term(576.0, 0, 3, 2), Term(64.0, 1, 3, 1), Term(-64.0, 0, 3, 0), Term(1296.0, 0, 2, 4), Term(-864.0, 1, 2, 3), Term(648.0, 0, 2, 2), Term(-144.0, 1, 2, 1), Term(72.0, 0, 2, 0), Term(-360.0, 0, 0, 4), Term(192.0, 1, 0, 3), Term(-504.0, 0, 0, 2), Term(88.0, 1, 0, 1), Term(-25.0, 0, 0, 0)], den: &[Term(1296.0, 0, 2, 4), Term(-1728.0, 1, 2, 3), Term(2592.0, 0, 2, 2), Term(-576.0, 1, 2, 1), Term(144.0, 0, 2, 0)] };

pub(super) static VARPI_A_3_3: Ratio2 = Ratio2 { num: &[Term(54.0, 0, 2, 2), Term(-36.0, 1, 2, 1), Term(18.0, 0, 2, 0), Term(-15.0, 0, 0, 2), Term(-2.0, 1, 0, 1), Term(-20.0, 0, 0, 0)], den: &[Term(54.0, 0, 2, 2), Term(-36.0, 1, 2, 1), Term(18.0, 0, 2, 0)] };

pub(super) static VARPI_S_1_1: Ratio2 = Ratio2 { num: &[Term(-576.0, 0, 2, 4), Term(37.0, 0, 2, 0), Term(1152.0, 0, 0, 4), Term(-288.0, 0, 0, 2)], den: &[Term(3456.0, 0, 0, 4), Term(-1728.0, 0, 0, 2), Term(216.0, 0, 0, 0)] };

pub(super) static VARPI_S_1_2: Ratio2 = Ratio2 { num: &[Term(-576.0, 0, 4, 4), Term(-91.0, 0, 4, 0), Term(-512.0, 1, 3, 1), Term(768.0, 0, 3, 0), Term(1152.0, 0, 2, 4), Term(-2592.0, 0, 2, 2), Term(2304.0, 1, 2, 1), Term(-1728.0, 0, 2, 0), Term(-1536.0, 1, 1, 3), Term(6912.0, 0, 1, 2), Term(-3456.0, 1, 1, 1), Term(1728.0, 0, 1, 0), Term(-1152.0, 0, 0, 4), Term(2304.0, 1, 0, 3), Term(-5184.0, 0, 0, 2), Term(1728.0, 1, 0, 1), Term(-648.0, 0, 0, 0)], den: &[Term(3456.0, 0, 2, 4), Term(-1728.0, 0, 2, 2), Term(216.0, 0, 2, 0)] };

pub(super) static VARPI_S_1_3: Ratio2 = Ratio2 { num: &[Term(-192.0, 0, 4, 4), Term(-9.0, 0, 4, 0), Term(384.0, 0, 2, 4), Term(-864.0, 0, 2, 2), Term(288.0, 0, 2, 0), Term(-512.0, 1, 1, 3), Term(2304.0, 0, 1, 2), Term(-576.0, 0, 1, 0), Term(-384.0, 0, 0, 4), Term(768.0, 1, 0, 3), Term(-1728.0, 0, 0, 2), Term(324.0, 0, 0, 0)], den: &[Term(1152.0, 0, 2, 4), Term(-576.0, 0, 2, 2), Term(72.0, 0, 2, 0)] };

pub(super) static VARPI_S_1_4: Ratio2 = Ratio2 { num: &[Term(-192.0, 0, 4, 4), Term(9.0, 0, 4, 0), Term(96.0, 1, 3, 1), Term(-144.0, 0, 3, 0), Term(384.0, 0, 2, 4), Term(-288.0, 0, 2, 2), Term(-576.0, 1, 2, 1), Term(720.0, 0, 2, 0), Term(1152.0, 1, 1, 1), Term(-1152.0, 0, 1, 0), Term(128.0, 0, 0, 4), Term(-256.0, 1, 0, 3), Term(576.0, 0, 0, 2), Term(-768.0, 1, 0, 1), Term(612.0, 0, 0, 0)], den: &[Term(1152.0, 0, 2, 4), Term(-576.0, 0, 2, 2), Term(72.0, 0, 2, 0)] };

pub(super) static VARPI_S_1_5: Ratio2 = Ratio2 { num: &[Term(-48.0, 0, 4, 4), Term(96.0, 0, 2, 4), Term(-72.0, 0, 2, 2), Term(18.0, 0, 2, 0), Term(32.0, 0, 0, 4), Term(-64.0, 1, 0, 3), Term(144.0, 0, 0, 2), Term(-27.0, 0, 0, 0)], den: &[Term(288.0, 0, 2, 4), Term(-144.0, 0, 2, 2), Term(18.0, 0, 2, 0)] };

pub(super) static VARPI_S_1_6: Ratio2 = Ratio2 { num: &[Term(48.0, 0, 4, 4), Term(256.0, 0, 3, 4), Term(-128.0, 1, 3, 3), Term(288.0, 0, 2, 4), Term(-192.0, 1, 2, 3), Term(72.0, 0, 2, 2), Term(18.0, 0, 2, 0), Term(48.0, 1, 0, 1), Term(-45.0, 0, 0, 0)], den: &[Term(288.0, 0, 2, 4), Term(-144.0, 0, 2, 2), Term(18.0, 0, 2, 0)] };

pub(super) static VARPI_S_2_3: Ratio2 = Ratio2 { num: &[Term(-576.0, 0, 4, 4), Term(-37.0, 0, 4, 0), Term(-224.0, 1, 3, 1), Term(336.0, 0, 3, 0), Term(1152.0, 0, 2, 4), Term(-864.0, 0, 2, 2), Term(576.0, 1, 2, 1), Term(-432.0, 0, 2, 0), Term(384.0, 0, 0, 4), Term(-768.0, 1, 0, 3), Term(1728.0, 0, 0, 2), Term(-576.0, 1, 0, 1), Term(216.0, 0, 0, 0)], den: &[Term(3456.0, 0, 2, 4), Term(-1728.0, 0, 2, 2), Term(216.0, 0, 2, 0)] };

pub(super) static VARPI_S_3_2: Ratio2 = Ratio2 { num: &[Term(-576.0, 0, 4, 4), Term(-37.0, 0, 4, 0), Term(-224.0, 1, 3, 1), Term(336.0, 0, 3, 0), Term(1152.0, 0, 2, 4), Term(-864.0, 0, 2, 2), Term(576.0, 1, 2, 1), Term(-432.0, 0, 2, 0), Term(384.0, 0, 0, 4), Term(-768.0, 1, 0, 3), Term(1728.0, 0, 0, 2), Term(-576.0, 1, 0, 1), Term(216.0, 0, 0, 0)], den: &[Term(3456.0, 0, 2, 4), Term(-1728.0, 0, 2, 2), Term(216.0, 0, 2, 0)] };

pub(super) static VARPI_S_3_3: Ratio2 = Ratio2 { num: &[Term(576.0, 0, 2, 4), Term(-37.0, 0, 2, 0), Term(3072.0, 0, 1, 4), Term(-1536.0, 1, 1, 3), Term(-224.0, 1, 1, 1), Term(336.0, 0, 1, 0), Term(3456.0, 0, 0, 4), Term(-2304.0, 1, 0, 3), Term(864.0, 0, 0, 2), Term(576.0, 1, 0, 1), Term(-432.0, 0, 0, 0)], den: &[Term(3456.0, 0, 0, 4), Term(-1728.0, 0, 0, 2), Term(216.0, 0, 0, 0)] };

pub(super) static VARPI_S_3_4: Ratio2 = Ratio2 { num: &[Term(192.0, 0, 4, 4), Term(9.0, 0, 4, 0), Term(1024.0, 0, 3, 4), Term(-512.0, 1, 3, 3), Term(96.0, 1, 3, 1), Term(-144.0, 0, 3, 0), Term(1152.0, 0, 2, 4), Term(-768.0, 1, 2, 3), Term(288.0, 0, 2, 2), Term(-576.0, 1, 2, 1), Term(720.0, 0, 2, 0), Term(1152.0, 1, 1, 1), Term(-1152.0, 0, 1, 0), Term(-576.0, 1, 0, 1), Term(540.0, 0, 0, 0)], den: &[Term(1152.0, 0, 2, 4), Term(-576.0, 0, 2, 2), Term(72.0, 0, 2, 0)] };

pub(super) static VARPI_S_3_5: Ratio2 = Ratio2 { num: &[Term(48.0, 0, 4, 4), Term(256.0, 0, 3, 4), Term(-128.0, 1, 3, 3), Term(288.0, 0, 2, 4), Term(-192.0, 1, 2, 3), Term(72.0, 0, 2, 2), Term(18.0, 0, 2, 0), Term(48.0, 1, 0, 1), Term(-45.0, 0, 0, 0)], den: &[Term(288.0, 0, 2, 4), Term(-144.0, 0, 2, 2), Term(18.0, 0, 2, 0)] };

pub(super) static VARPI_S_4_1: Ratio2 = Ratio2 { num: &[Term(-9.0, 0, 2, 2), Term(-2.0, 1, 2, 1), Term(-1.0, 0, 2, 0), Term(-48.0, 0, 1, 2), Term(16.0, 1, 1, 1), Term(12.0, 0, 1, 0), Term(90.0, 0, 0, 2), Term(-36.0, 1, 0, 1)], den: &[Term(162.0, 0, 0, 2), Term(-108.0, 1, 0, 1), Term(54.0, 0, 0, 0)] };

pub(super) static VARPI_S_4_2: Ratio2 = Ratio2 { num: &[Term(-9.0, 0, 4, 4), Term(4.0, 1, 4, 3), Term(-48.0, 0, 3, 4), Term(48.0, 1, 3, 3), Term(-36.0, 0, 3, 2), Term(90.0, 0, 2, 4), Term(-96.0, 1, 2, 3), Term(126.0, 0, 2, 2), Term(-36.0, 1, 2, 1), Term(18.0, 0, 2, 0), Term(32.0, 1, 1, 3), Term(-144.0, 0, 1, 2), Term(72.0, 1, 1, 1), Term(-36.0, 0, 1, 0), Term(48.0, 0, 0, 4), Term(-96.0, 1, 0, 3), Term(216.0, 0, 0, 2), Term(-72.0, 1, 0, 1), Term(27.0, 0, 0, 0)], den: &[Term(162.0, 0, 2, 4), Term(-216.0, 1, 2, 3), Term(324.0, 0, 2, 2), Term(-72.0, 1, 2, 1), Term(18.0, 0, 2, 0)] };

/// Replacement for `VARPI_A_1_6`, consistent with its published second
/// derivative and with exact evaluation.
pub(super) static VARPI_A_1_6_FIX: Ratio2 = Ratio2 { num: &[Term(-24.0, 0, 2, 2), Term(2.0, 0, 2, 0), Term(-4.0, 0, 0, 2), Term(-3.0, 0, 0, 0)], den: &[Term(-24.0, 0, 2, 2), Term(2.0, 0, 2, 0)] };

/// Replacement for `VARPI_A_1_3`, recovered from exact rational evaluation of
/// the mean; the published form has the opposite sign.
pub(super) static VARPI_A_1_3_FIX: Ratio2 = Ratio2 { num: &[Term(-2592.0, 0, 4, 4), Term(2304.0, 1, 4, 3), Term(-1728.0, 0, 4, 2), Term(15.0, 0, 4, 0), Term(432.0, 1, 3, 1), Term(216.0, 0, 3, 0), Term(46656.0, 0, 2, 4), Term(-9072.0, 0, 2, 2), Term(-1728.0, 1, 2, 1), Term(-432.0, 0, 2, 0), Term(9216.0, 1, 1, 3), Term(13824.0, 0, 1, 2), Term(2304.0, 1, 1, 1), Term(384.0, 0, 1, 0), Term(-10656.0, 0, 0, 4), Term(-12288.0, 1, 0, 3), Term(-4032.0, 0, 0, 2), Term(-1024.0, 1, 0, 1), Term(-128.0, 0, 0, 0)], den: &[Term(46656.0, 0, 2, 4), Term(-7776.0, 0, 2, 2), Term(324.0, 0, 2, 0)] };
