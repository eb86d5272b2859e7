//! Reference values frozen from 40-digit mpmath evaluations.

// (n, z, J'_n(z)/J_n(z))
pub const LOG_DERIV: &[(u32, (f64, f64), (f64, f64))] = &[
    (0, (0.0007071067811865475, -0.0007071067811865475), (-0.00035355334639909256, 0.0003535534347874402)),
    (1, (0.0007071067811865475, -0.0007071067811865475), (707.1066044098595, 707.1069579632501)),
    (2, (0.0007071067811865475, -0.0007071067811865475), (1414.2134445219672, 1414.2136802242276)),
    (5, (0.0007071067811865475, -0.0007071067811865475), (3535.533847007173, 3535.533964858303)),
    (10, (0.0007071067811865475, -0.0007071067811865475), (7071.067779724258, 7071.067844006692)),
    (25, (0.0007071067811865475, -0.0007071067811865475), (17677.66951606548, 17677.669543261894)),
    (0, (0.3535533905932738, -0.3535533905932738), (-0.17103254390770406, 0.1820613432915031)),
    (1, (0.3535533905932738, -0.3535533905932738), (1.3267600690465589, 1.5035080002094356)),
    (2, (0.3535533905932738, -0.3535533905932738), (2.769810997638592, 2.8876570132059833)),
    (5, (0.3535533905932738, -0.3535533905932738), (7.041648986577171, 7.100574323326995)),
    (10, (0.3535533905932738, -0.3535533905932738), (14.126072630901849, 14.158213834925746)),
    (25, (0.3535533905932738, -0.3535533905932738), (35.34854056109934, 35.362138768221975)),
    (0, (2.1213203435596424, -2.1213203435596424), (-0.14748210117988336, 0.9110785947358934)),
    (1, (2.1213203435596424, -2.1213203435596424), (-0.06256364377642805, 0.8338708353351769)),
    (2, (2.1213203435596424, -2.1213203435596424), (0.19620321946449823, 0.8674745298198812)),
    (5, (2.1213203435596424, -2.1213203435596424), (1.011988143413642, 1.363786997070437)),
    (10, (2.1213203435596424, -2.1213203435596424), (2.2622922643505525, 2.4550362784869946)),
    (25, (2.1213203435596424, -2.1213203435596424), (5.851893441985962, 5.933481069629512)),
    (0, (7.000357133746821, -7.000357133746821), (-0.037074369078948406, 0.9643999814018979)),
    (1, (7.000357133746821, -7.000357133746821), (-0.03162172362116556, 0.9639590840021017)),
    (2, (7.000357133746821, -7.000357133746821), (-0.015196142200564611, 0.9628173122590976)),
    (5, (7.000357133746821, -7.000357133746821), (0.10126780877712997, 0.9637920590156507)),
    (10, (7.000357133746821, -7.000357133746821), (0.46553833365267305, 1.0673495664438641)),
    (25, (7.000357133746821, -7.000357133746821), (1.6559880970127419, 1.924604600219448)),
    (0, (7.14177848998413, -7.14177848998413), (-0.03631272088689095, 0.9651004482532805)),
    (1, (7.14177848998413, -7.14177848998413), (-0.031079231778112767, 0.964686177463571)),
    (2, (7.14177848998413, -7.14177848998413), (-0.015321077070529522, 0.9636124951352594)),
    (5, (7.14177848998413, -7.14177848998413), (0.09634906186533579, 0.9643012810941306)),
    (10, (7.14177848998413, -7.14177848998413), (0.44928508407043943, 1.060761260954673)),
    (25, (7.14177848998413, -7.14177848998413), (1.618229128422406, 1.8922192838063987)),
    (0, (17.67766952966369, -17.67766952966369), (-0.014347758408561588, 0.9858640501899291)),
    (1, (17.67766952966369, -17.67766952966369), (-0.013525234322510852, 0.9858395734258947)),
    (2, (17.67766952966369, -17.67766952966369), (-0.011057148883384786, 0.9857704105291322)),
    (5, (17.67766952966369, -17.67766952966369), (0.0062370498298785, 0.9854663872433778)),
    (10, (17.67766952966369, -17.67766952966369), (0.06802334256827507, 0.9869780836892879)),
    (25, (17.67766952966369, -17.67766952966369), (0.45544140186610155, 1.0846130391617157)),
    (0, (106.98525599352465, -106.98525599352465), (-0.0023422566051017873, 0.9976632553040349)),
    (1, (106.98525599352465, -106.98525599352465), (-0.002320312549866841, 0.9976631519015142)),
    (2, (106.98525599352465, -106.98525599352465), (-0.0022544803291464424, 0.9976628446098772)),
    (5, (106.98525599352465, -106.98525599352465), (-0.0017936525415515043, 0.9976608160397985)),
    (10, (106.98525599352465, -106.98525599352465), (-0.0001478108311734567, 0.9976553208707022)),
    (25, (106.98525599352465, -106.98525599352465), (0.01137325602487159, 0.9976934231564406)),
    (0, (707.1067811865476, -707.1067811865476), (-0.0003536784789813331, 0.9996464466979906)),
    (1, (707.1067811865476, -707.1067811865476), (-0.0003531781254288293, 0.9996464463437489)),
    (2, (707.1067811865476, -707.1067811865476), (-0.0003516770647670574, 0.9996464452825278)),
    (5, (707.1067811865476, -707.1067811865476), (-0.00034116963995650554, 0.9996464379171585)),
    (10, (707.1067811865476, -707.1067811865476), (-0.00030364312027578535, 0.9996464125148137)),
    (25, (707.1067811865476, -707.1067811865476), (-4.095738542310764e-05, 0.9996462741848466)),
    (0, (7071.067811865475, -7071.067811865475), (-3.535658914771572e-05, 0.9999646446610291)),
    (1, (7071.067811865475, -7071.067811865475), (-3.535158879416234e-05, 0.9999646446606755)),
    (2, (7071.067811865475, -7071.067811865475), (-3.5336587733502154e-05, 0.9999646446596148)),
    (5, (7071.067811865475, -7071.067811865475), (-3.523158030887906e-05, 0.999964644652196)),
    (0, (2.5, 1.0), (-0.11099911780632653, -1.2440900145900031)),
    (1, (2.5, 1.0), (-0.27367798931195975, -0.6595212767467783)),
    (2, (2.5, 1.0), (0.2551971841238752, -0.5209387830507111)),
    (5, (2.5, 1.0), (1.5120742894485693, -0.7825114095929703)),
    (10, (2.5, 1.0), (3.3339550781521257, -1.4263338072431413)),
    (25, (2.5, 1.0), (8.572557307923262, -3.4676288245786036)),
    (0, (-7.0, 3.0), (0.06092764971645835, -0.9710541605903964)),
    (1, (-7.0, 3.0), (0.05632889715534374, -0.9740462986782263)),
    (2, (-7.0, 3.0), (0.04068112948000103, -0.9422521741706561)),
    (5, (-7.0, 3.0), (-0.10990864809322533, -0.7725746477130078)),
    (10, (-7.0, 3.0), (-0.8810139125247931, -0.6963576385701247)),
    (25, (-7.0, 3.0), (-2.8816299668041907, -1.3537409772614657)),
    (0, (12.0, -0.5), (0.6023485886568315, 1.8676692293386257)),
    (1, (12.0, -0.5), (-0.23960196572095457, 0.4815151836826382)),
    (2, (12.0, -0.5), (0.8037659733186937, 1.429837604718928)),
    (5, (12.0, -0.5), (-0.8778849973058667, 1.507446909195783)),
    (10, (12.0, -0.5), (-0.050839349811426474, 0.14886983335307266)),
    (25, (12.0, -0.5), (1.8358749691290581, 0.09804082808237671)),
    (0, (0.3, -40.0), (-9.496285665268637e-05, 0.9874205583098374)),
    (1, (0.3, -40.0), (-9.009158888845643e-05, 0.9877410968073984)),
    (2, (0.3, -40.0), (-7.54977687206538e-05, 0.9887020634667472)),
    (5, (0.3, -40.0), (2.583056241988101e-05, 0.9954018131069364)),
    (10, (0.3, -40.0), (0.00037646402539882315, 1.0189562133351397)),
    (25, (0.3, -40.0), (0.0024555175773224025, 1.170253995224629)),
    (0, (60.0, 60.0), (-0.004184172385519503, -0.9958334818420903)),
    (1, (60.0, 60.0), (-0.004114149446270579, -0.9958328896756836)),
    (2, (60.0, 60.0), (-0.003904079615157914, -0.9958311430749553)),
    (5, (60.0, 60.0), (-0.0024335504864477983, -0.9958201727558572)),
    (10, (60.0, 60.0), (0.0028187877055938816, -0.9957989415742777)),
    (25, (60.0, 60.0), (0.039569737828580635, -0.9964356000724212)),
];
// (n, z, J_n(z) e^{-|Im z|})
pub const SCALED: &[(u32, (f64, f64), (f64, f64))] = &[
    (0, (0.0007071067811865475, -0.0007071067811865475), (0.9992931431598827, 2.4982328578997416e-07)),
    (1, (0.0007071067811865475, -0.0007071067811865475), (0.0003533035231237248, -0.00035330343479785507)),
    (3, (0.0007071067811865475, -0.0007071067811865475), (-1.4720977369971826e-11, -1.4720979210094113e-11)),
    (0, (0.3535533905932738, -0.3535533905932738), (0.7015027889697949, 0.043882019358870046)),
    (1, (0.3535533905932738, -0.3535533905932738), (0.12796902594667292, -0.12021128667982203)),
    (3, (0.3535533905932738, -0.3535533905932738), (-0.0012726973203775888, -0.0013131035277159963)),
    (0, (2.1213203435596424, -2.1213203435596424), (-0.0265375700281775, 0.2322648253079406)),
    (1, (2.1213203435596424, -2.1213203435596424), (0.20769769406017236, 0.05843271647557094)),
    (3, (2.1213203435596424, -2.1213203435596424), (-0.015636648176914313, -0.0677740603552619)),
    (0, (7.000357133746821, -7.000357133746821), (0.12163303087891617, 0.03961546725057918)),
    (1, (7.000357133746821, -7.000357133746821), (0.04271462375868212, -0.11583417426340024)),
    (3, (7.000357133746821, -7.000357133746821), (-0.056692131690989515, 0.07325207747044404)),
    (0, (7.14177848998413, -7.14177848998413), (0.11366115305832002, 0.05581688155960154)),
    (1, (7.14177848998413, -7.14177848998413), (0.05799624313996068, -0.1076675669247189)),
    (3, (7.14177848998413, -7.14177848998413), (-0.06575139812903673, 0.06475482911943956)),
    (0, (17.67766952966369, -17.67766952966369), (0.00020597312549277194, -0.08007052729020157)),
    (1, (17.67766952966369, -17.67766952966369), (-0.07893569908251814, -0.0013518940809345325)),
    (3, (17.67766952966369, -17.67766952966369), (0.06987075407653616, 0.009377159984887248)),
    (0, (106.98525599352465, -106.98525599352465), (0.03165451530886212, -0.007151065629613111)),
    (1, (106.98525599352465, -106.98525599352465), (-0.0070602124173691355, -0.031597296418815264)),
    (3, (106.98525599352465, -106.98525599352465), (0.006345816858484216, 0.031136757548772268)),
    (0, (707.1067811865476, -707.1067811865476), (-0.01248555223699631, 0.0018149561389371462)),
    (1, (707.1067811865476, -707.1067811865476), (0.0018098985840768003, 0.012481779839702148)),
    (3, (707.1067811865476, -707.1067811865476), (-0.0017695504925273676, -0.012451584357072514)),
    (0, (2.5, 1.0), (-0.06693797982137321, -0.20317309109099294)),
    (1, (2.5, 1.0), (0.24533555715177932, -0.10582890616568216)),
    (3, (2.5, 1.0), (0.07458758829289698, 0.07787383066979331)),
    (0, (-7.0, 3.0), (0.14470137227176072, 0.017225599909521994)),
    (1, (-7.0, 3.0), (-0.025543304984071563, 0.13946335427018985)),
    (3, (-7.0, 3.0), (0.0754756671727236, -0.09049419486293009)),
    (0, (12.0, -0.5), (0.03408503338832049, -0.07053041405572559)),
    (1, (12.0, -0.5), (-0.152258555820167, -0.021175672676497587)),
    (3, (12.0, -0.5), (0.1316214940921923, 0.042299706202089185)),
    (0, (0.3, -40.0), (0.06052133032672722, 0.018471470012784926)),
    (1, (0.3, -40.0), (0.01824485651124376, -0.0597582516773121)),
    (3, (0.3, -40.0), (-0.016529929375978494, 0.0539927152870846)),
    (0, (60.0, 60.0), (-0.043201113336494464, -0.003637884536349662)),
    (1, (60.0, 60.0), (0.0034419663189263236, -0.04303633664935475)),
    (3, (60.0, 60.0), (-0.001928484541664136, 0.04171373794899556)),
];
// (xi, ber, bei, ber', bei')
pub const KELVIN: &[(f64, f64, f64, f64, f64)] = &[
    (0.5, 0.9990234639908383, 0.062493218382199456, -0.007812076147507734, 0.24991862111621022),
    (2.0, 0.7517341827138082, 0.9722916273066612, -0.49306712470943914, 0.9170136133840363),
    (8.0, 20.973955610730258, -35.016725164881514, 38.31132570089802, -7.660318413649827),
    (20.0, 47489.37026506176, 114775.19736006622, -48803.19784717097, 111855.02522349713),
    (50.0, -117623968512357.44, -50192646254462.21, -46498923792943.0, -118164845285864.86),
];

// (f_hz, Z_int [ohm/m]) of an isolated a = 10 mm copper wire
pub const INTERNAL_IMPEDANCE: &[(f64, (f64, f64))] = &[
    (1.0, (5.488161430871861e-05, 3.1415754962485515e-07)),
    (50.0, (5.6347684404788655e-05, 1.54984498528969e-05)),
    (1000.0, (0.00014607310473579603, 0.00012995600688800856)),
    (100000.0, (0.0013268920729137853, 0.001312954528246849)),
    (1000000.0, (0.004166028247031156, 0.004152239765396274)),
    (100000000.0, (0.04153646358074532, 0.0415227365244605)),
];
