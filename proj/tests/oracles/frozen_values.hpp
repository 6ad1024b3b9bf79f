// Generated by tests/oracles/generate_oracles.py (mpmath, 40 digits); do not edit.
#pragma once

namespace lfb::oracle {

inline constexpr double K_zeta_C1_025_t7778 = 9.1422074434491814668e-1;
inline constexpr double a1_zeta = 5.4398954698434962554;
inline constexpr double b1_zeta = 9.5059835670054275025e-1;
inline constexpr double a2_zeta = 3.3280437000943159305e+1;
inline constexpr double b2_zeta = 9.7099617550453866394e-1;
inline constexpr double a1_dirichlet = 5.4398954698434962554;
inline constexpr double b1_dirichlet = 9.5052542125174294421e-1;
inline constexpr double a2_dirichlet = 3.3280437000943159305e+1;
inline constexpr double b2_dirichlet = 9.7092160034722784377e-1;
inline constexpr double a1_dedekind2 = 1.0879789825291651229e+1;
inline constexpr double b1_dedekind2 = 9.9553175342890075662e-1;
inline constexpr double a2_dedekind2 = 6.7420934220490047058e+1;
inline constexpr double b2_dedekind2 = 1.0130731087327058911;
inline constexpr double K1_dedekind = 9.4983388988048692604e-1;
inline constexpr double K2_dedekind = 9.139572709682766117e-2;
inline constexpr double R_C2_05_T1_1e4 = 1.0006126650209950243;
inline constexpr double R_C2_067_T1_9999 = 1.340650952722931915;
inline constexpr double elem_log_m1_B05_t1e4 = 1.6207859688040371816;
inline constexpr double elem_logder_m1_B05_t1e4 = 4.4406536127356928373;
inline constexpr double pref_dir_18_7778 = 9.6919913762951326909e-1;
inline constexpr double pref_dir_18_1e6 = 9.3048301372531350317e-1;
inline constexpr double pref_dir_1_1e12 = 1.0633463451892855797;
inline constexpr double pref_dir_limit_alpha1 = 1.0413633138435536162;
inline constexpr double pref_ded_18_7778_n2 = 1.8935097434142467848;
inline constexpr double mertens_b_zeta = 7.0845218443491047981e-1;
inline constexpr double mertens_epsilon0 = 9.9885191871797516045e-1;
inline constexpr double mertens_kappa = 9.8999425629647062001e-1;
inline constexpr double mertens_coef_sigma0 = 1.9325958832324296196e+14;
inline constexpr double mertens_coef_kappa = 5.5570341243109724817e+2;
inline constexpr double mertens_log10_xmin = 7.1098596597047525102e+2;
inline constexpr double crossover_log10 = 7.1439095286303454821e+2;
inline constexpr double envelope_11520_1e5 = 1.4077253021448040923e+11;
inline constexpr double envelope_11520_2p6e7 = 5.9455862567779252764e+14;
inline constexpr double inv_abs_zeta_integral_0_10 = 1.0735234099618200644e+1;
inline constexpr double zeta_prime_2 = -9.375482543158437537e-1;
inline constexpr double zeta_098_100_re = 1.6549204377505253903;
inline constexpr double zeta_098_100_im = -6.7536031817623589787e-2;
inline constexpr double zeta_098_0 = -4.9424242587326809754e+1;
inline constexpr double inv_abs_zeta_098_25 = 2.0789759632569039107;
inline constexpr double first_zero_ordinate = 1.413472514173469379e+1;

struct ZetaPoint {
  double sigma, t, re, im;
  bool has_derivative;
  double d_re, d_im;
};

inline constexpr ZetaPoint kZetaPoints[] = {
    {1.9803710216975023, 770.90870840538355, 1.2912310407300248556, 3.6900478859513420164e-2, true, -2.059315836720830581e-1, -8.1831676482058158569e-2},
    {1.0730073638470907, 149.84021608220354, 4.9149759175981892054e-1, -3.088492690543666111e-1, false, 0.0, 0.0},
    {2.2674327520184612, 865.00378227834051, 8.2427942980629010904e-1, -1.2328820614884095564e-1, false, 0.0, 0.0},
    {1.2701072666389135, 231.60165325556804, 4.7124089934791352057e-1, 1.7184318749335339143e-2, false, 0.0, 0.0},
    {2.1627977862290257, 901.27914096635141, 7.9714167539773305044e-1, -1.6913768617568367715e-2, true, 1.0775112417359154285e-1, -2.1174811718671484732e-2},
    {0.72308479433992745, 49.937191658077637, 2.0861939264289404631e-1, 2.558584514773744294e-1, false, 0.0, 0.0},
    {1.3311288337936467, 299.44609614365248, 1.2816696476286268172, -2.9370141927201944135e-1, false, 0.0, 0.0},
    {1.9645043851351374, 181.67667928914932, 1.2756839190041279445, 7.4052431572170585554e-5, false, 0.0, 0.0},
    {0.48064681386743624, 326.70513542984224, 2.3461553030766854554, -4.0799603072547092367, true, -7.4802356538099684415e-2, 1.0979218188603999781e+1},
    {1.0107734931977248, 301.09877008915709, 8.975073565582529491e-1, -5.9263876472459964583e-1, false, 0.0, 0.0},
    {1.4791903498885222, 210.10833098173975, 1.169596867172050631, -9.4129617332345517701e-2, false, 0.0, 0.0},
    {2.9317759931232867, 621.80511418745766, 8.8522832638287237677e-1, 8.7063754753694789889e-2, false, 0.0, 0.0},
    {2.2984597483671294, 374.40338293152166, 8.7366155668028877167e-1, -1.5006427949765740232e-1, true, 8.2083463550924829738e-2, 6.0139944977926873618e-2},
    {2.8323266440670838, 839.7651239642156, 9.3577393054524257278e-1, 1.2382653459959503404e-1, false, 0.0, 0.0},
    {1.0411162810415047, 710.85137170379744, 5.0687956944574711781e-1, -5.4375604258983279903e-1, false, 0.0, 0.0},
    {2.8571957449796739, 571.42218394924282, 1.1950397967910835814, -2.6031431535428854367e-2, false, 0.0, 0.0},
    {1.3629613677042309, 377.07646361343228, 8.5619840261410073889e-1, 4.0606342553279304548e-1, true, 3.7913459704803949051e-2, -5.4531838625957104575e-1},
    {2.5682718006267429, 534.217463069269, 1.125366913552503746, 6.9794909124059013824e-2, false, 0.0, 0.0},
    {2.8313875028079138, 686.50493811717104, 1.0150134377334623242, 1.4070186669044256775e-1, false, 0.0, 0.0},
    {2.5273482594526668, 665.8100549260455, 8.0182374231680002879e-1, -6.2295720054761300681e-2, false, 0.0, 0.0},
    {1.3779736241595226, 328.98937030304489, 6.3631288618241823958e-1, -2.7824098619164373305e-1, true, 3.6155448965947254308e-1, 1.3693115960641326202e-1},
    {2.8935737582016401, 698.8407933623381, 1.1350731616232208994, -1.4351023160084743269e-1, false, 0.0, 0.0},
    {1.4561427663228796, 95.329148065042119, 5.7773364085499860113e-1, 8.5812435207702165327e-2, false, 0.0, 0.0},
    {1.4792176543089406, 717.02351004875595, 1.1119760976220593035, -3.9027582889174454996e-1, false, 0.0, 0.0},
    {1.2610107112871227, 878.9529730361171, 1.5588684077473282077, 2.1283403751572218982e-1, true, -6.1332788844029808514e-1, 9.5840397666309098385e-2},
    {0.70287615856516705, 603.30343380350632, 4.4589426242333305843e-1, -3.9750718495689562992e-2, false, 0.0, 0.0},
    {2.17840606412418, 62.279818934466881, 1.2383847054059303274, 3.0950826177601930123e-1, false, 0.0, 0.0},
    {2.1174896010216866, 669.98987116388616, 1.2428540679737394488, 1.1293969198287940219e-1, false, 0.0, 0.0},
    {2.2557420851022281, 726.43998507909657, 1.2490652296837719234, -2.6488995411715048843e-1, true, -2.3517435355610096244e-1, 2.9050242378892693222e-1},
    {2.2258922438469715, 975.12983919260432, 7.8413506489458242815e-1, 8.3786625935985860988e-2, false, 0.0, 0.0},
    {2.7719741644581437, 334.43441865576165, 1.0553907489870056533, 1.1512717114971374062e-1, false, 0.0, 0.0},
    {1.8091880950720305, 950.09842691895369, 1.1272823035728458329, 1.3118732896759797723e-1, false, 0.0, 0.0},
    {1.0456331355795014, 359.38762405729352, 9.153589563896106568e-1, 2.5155795024091224934e-1, true, -1.1315895033029090525e-1, 2.7916440065042618779e-1},
    {2.4068900657493999, 726.2308509926263, 1.2600682811163715596, -1.7652028162776800921e-1, false, 0.0, 0.0},
    {1.5074204758880891, 45.579266184935463, 1.7708951699944547659, -1.7835276443162187257e-2, false, 0.0, 0.0},
    {2.3933485014707894, 915.7847905627159, 1.2579356151270790756, -9.6043335444405246819e-2, false, 0.0, 0.0},
    {2.7163113727811043, 743.05705169472662, 1.224752381093612898, 4.9418709155125541082e-2, true, -2.0281154708113045083e-1, -4.1270432049394664913e-2},
    {2.6641797493711032, 771.04245711203316, 1.1786762550348796019, -1.4717256158601867558e-2, false, 0.0, 0.0},
    {1.0831337081318004, 624.35173789576163, 1.4337136038361940585, 2.8959245646845111539e-1, false, 0.0, 0.0},
    {1.5799456945786097, 621.93756523601655, 6.7422599929449465666e-1, 1.9341079198843680436e-1, false, 0.0, 0.0},
    {2.0085017915902781, 86.632119405870895, 8.8596703606283287418e-1, -4.6503680472486896985e-2, true, 1.8489971869762218583e-2, 1.0657216109425522481e-1},
    {2.6328701620309913, 314.36629107730016, 9.5384868309774688188e-1, 1.3970666671154710959e-1, false, 0.0, 0.0},
    {1.5411444873737321, 375.91683900696302, 6.3009032609025686065e-1, 3.1163596748253275798e-3, false, 0.0, 0.0},
    {0.60283666064621144, 221.87602637741699, 3.4494702084118477735e-2, 8.9685354628873209561e-1, false, 0.0, 0.0},
    {1.6820521200955802, 982.40340958740478, 8.01014141615436618e-1, -4.1094208925650904659e-3, true, 1.2500905123281694096e-1, -6.7316213124846150422e-2},
    {2.1983237227085501, 185.64110386549447, 7.2792980537261180444e-1, -1.7974065016432732249e-2, false, 0.0, 0.0},
    {1.1411262856328874, 57.789293989074174, 1.0947292643268704925, -2.7418331625725568286e-1, false, 0.0, 0.0},
    {2.6965949292631812, 555.06361201218658, 1.0491085133925153845, -1.9106868657651107999e-1, false, 0.0, 0.0},
    {2.9046628823788172, 51.367876720166073, 9.738697579384145075e-1, 1.0508100999715224797e-1, true, -2.4767903260677138524e-3, -6.6605342218296307529e-2},
    {1.5579189425581128, 757.42735567841169, 7.0093323290717111798e-1, 1.943161705355881607e-2, false, 0.0, 0.0},
    {2.4613700305871307, 673.73730759399052, 9.1412087701497362774e-1, -6.370898248495932672e-2, false, 0.0, 0.0},
    {2.5069236605268248, 375.23980715461391, 8.4406828342000626488e-1, -6.6837277882746897647e-2, false, 0.0, 0.0},
    {2.7137167206275543, 97.82385784405156, 1.0770226238757624746, 1.186030885278069462e-1, true, -7.4413206683281002669e-2, -6.5663976348316565267e-2},
    {2.2087033625547385, 2.6608806925810802, 8.3985158067771253441e-1, -1.5268375709792844796e-1, false, 0.0, 0.0},
    {2.244581643508802, 167.1345697109864, 8.4574065743659231984e-1, -9.8310117786929044486e-2, false, 0.0, 0.0},
    {1.2394221781473693, 917.32408022718982, 8.9217992741913778944e-1, -6.3053827685675282483e-1, false, 0.0, 0.0},
    {1.4586710080837042, 909.35811955289023, 1.1276379527273275778, -2.7949444119570580515e-1, true, -3.6563495200009649324e-1, 2.48876360100478685e-1},
    {1.9524949939736529, 74.670652648003994, 1.077684431163321155, -3.9052949898177685515e-1, false, 0.0, 0.0},
    {1.9483701305665035, 425.51777357140998, 1.2344947339986438181, 1.0378900717396726366e-1, false, 0.0, 0.0},
    {2.7580315449606632, 79.415474996077705, 1.0092373355206730883, 1.7559913920982251233e-1, false, 0.0, 0.0},
    {2.9878574155809039, 413.57455084372498, 9.0965269155239147842e-1, 4.5700295742612001424e-2, true, 5.5626201926301636795e-2, -1.5325938652572737074e-2},
    {1.6344585031545282, 638.54690432454402, 6.4368220357923937482e-1, 8.0605354664472582474e-2, false, 0.0, 0.0},
    {1.1765005542104032, 785.16744259978793, 8.0726404776695129713e-1, -1.4856435578753406357e-1, false, 0.0, 0.0},
    {1.4792345421842601, 542.5419745032201, 1.3443700814837375447, 8.0407053934834374205e-1, false, 0.0, 0.0},
    {2.6055787458804445, 88.959365198772559, 9.8052811313610963155e-1, 1.9325614800790172611e-1, true, 6.2352302423209551987e-2, -1.5250775564422060256e-1},
    {1.190161624997212, 303.70065953082383, 1.0986579857160883195, -3.7146329905792914052e-2, false, 0.0, 0.0},
    {0.97672709413124337, 727.8289752866433, 4.2765754069271527955e-1, -6.1686917727221490691e-1, false, 0.0, 0.0},
    {1.3961245027642262, 685.29288614492873, 7.0074811553045769107e-1, 2.6731695702491438587e-1, false, 0.0, 0.0},
    {2.4157565116642976, 423.63752270394252, 1.0023270562278864359, 1.4575681566659206807e-1, true, 4.5190727930952490758e-4, -7.7061726614476691115e-2},
    {2.1306944589717705, 462.32791799221098, 1.3140444156163764984, 7.5677796469469048766e-2, false, 0.0, 0.0},
    {0.46783850819244999, 7.6800965219355755, 1.1711931059882483842, 3.9162822380818753371e-1, false, 0.0, 0.0},
    {2.5827986265961567, 363.43636204785048, 1.0940895610725516159, -1.0572552024610399388e-1, false, 0.0, 0.0},
    {1.885866401705576, 315.96184223728653, 1.2044916611523271218, 2.1078519911903037046e-1, true, -1.6125614187633407889e-1, -2.2671303736498109389e-1},
    {1.2944115744735358, 718.70717583095575, 7.4291894091967301647e-1, -1.9450707616856715275e-1, false, 0.0, 0.0},
    {1.7700860141256975, 937.64224966296229, 9.0375221265118950386e-1, -7.1548169678283222251e-2, false, 0.0, 0.0},
    {1.7691663045989934, 623.69442031878532, 1.214060965784888436, 3.2362705005675226348e-1, false, 0.0, 0.0},
    {2.5082380300004465, 815.31554174803114, 1.1255158342762161077, 1.2338721047951113354e-1, true, -7.3924102224051936093e-2, -1.3116256691437912554e-1},
    {2.4363293172758178, 855.79288830992232, 8.3172516769755511289e-1, -4.771366579012613593e-2, false, 0.0, 0.0},
    {1.5419472566326506, 611.50993427277115, 7.8039507821219560969e-1, 5.4601725206831450681e-2, false, 0.0, 0.0},
    {0.48139718332151982, 519.95712726735974, -1.9824134353893581009e-1, -6.739812571110090217e-1, false, 0.0, 0.0},
    {0.54058849475677295, 419.74677633471305, -1.1798014877375228763e-1, -2.293184943305188673e-1, true, 1.8541568395795759538, -1.1692536045877242293},
    {1.1392129728521119, 786.62938625412403, 5.2943187170475296737e-1, 3.4859615499104941091e-1, false, 0.0, 0.0},
    {2.283463043057433, 677.60947681378389, 8.6691477977870574693e-1, 1.9123103551905274237e-1, false, 0.0, 0.0},
    {1.1403116470422026, 183.49020032341312, 1.4383517056381013661, -7.679572347073515686e-1, false, 0.0, 0.0},
    {1.0641195807871475, 800.39144590789317, 1.5053590194158359582, -2.0226616755943144167e-1, true, -1.2807884989136794388, -2.000429254639349384e-1},
    {0.50954336445077963, 628.93550221086832, 2.3023731917349268198, 1.1934639978503042994, false, 0.0, 0.0},
    {2.0089241643862463, 99.20647745611322, 1.1660555616790111356, 3.9432755318544756548e-2, false, 0.0, 0.0},
    {2.3809910608876268, 938.98193787626406, 8.6208805126504232244e-1, 1.9485545691348613352e-2, false, 0.0, 0.0},
    {0.78706911163884052, 105.43674647273704, 3.6580605663804014297e-1, 7.0512761893470718264e-2, true, 8.5026065419149589606e-1, 1.7487693768019920007e-1},
    {2.529944214099602, 326.89531847168809, 1.2143457413426403096, -1.4888929500420011312e-1, false, 0.0, 0.0},
    {1.691963581468729, 710.28885501930142, 9.2256700522041531651e-1, -3.1838298278870785722e-1, false, 0.0, 0.0},
    {2.427241845864518, 373.36774332737753, 9.8816912136546568272e-1, -2.321223840991071854e-1, false, 0.0, 0.0},
    {0.76062631623971699, 392.28313392437053, 3.3550916055081580817e-1, -2.4005404169928867874e-2, true, 7.744476272417667103e-1, -3.0594199697389715679e-1},
    {1.8910989218145393, 687.47081724699922, 1.222441312663295946, 1.3891443984184662856e-1, false, 0.0, 0.0},
    {1.9974490113370433, 890.0873959863759, 9.9590413316295348566e-1, -1.6061950428142343209e-1, false, 0.0, 0.0},
    {1.6546857356830773, 937.73190913796805, 9.0098319224231378439e-1, -7.5853765394326122165e-2, false, 0.0, 0.0},
    {1.4409252161680093, 70.111771536626293, 9.0628982327125093615e-1, 2.7247815619669843314e-1, true, 1.2863724815601003317e-1, -2.8505811365214088872e-1},
    {2.2407123351231149, 243.77752578417645, 1.0538125049877506211, 2.1654339376767677381e-1, false, 0.0, 0.0},
    {2.3900108728179505, 730.87119633847237, 8.7836327822875129458e-1, 1.4570820847040096987e-1, false, 0.0, 0.0},
    {2.6840391389049225, 914.84957057516203, 1.2019361739055012386, 9.5295645819432073617e-2, false, 0.0, 0.0},
    {1.1532834316538247, 5835.2479307595931, 8.6007392998476712868e-1, 1.6221067699984655124e-1, true, -1.9679746388102121771e-3, -6.555316146210754057e-2},
    {1.7894340914091029, 15020.070928353271, 1.3086349003876658804, -1.271008220899883177e-1, false, 0.0, 0.0},
    {1.9128220836363949, 23836.524268133573, 8.1158477542209543562e-1, 2.1930417094042372031e-1, false, 0.0, 0.0},
    {1.3330209183868149, 25427.275009835786, 2.2040960530700501759, -5.0705823313220601256e-1, false, 0.0, 0.0},
    {2.0580875979402262, 18702.742591345203, 9.6297809345839989284e-1, -3.0848293698330704151e-1, true, 9.0655535150716620241e-2, 2.2371497797705037037e-1},
    {0.4263402517114685, 19742.443304013872, 1.417386342045113329e+1, -3.4530048490029108165, false, 0.0, 0.0},
    {0.71174731243257905, 26135.879465311365, 8.3873180636072526454e-1, -7.4021271000714643929e-1, false, 0.0, 0.0},
    {0.40997691184279628, 25271.270314021593, 3.7936715167545605289e-1, -3.1528250169738921051e-1, false, 0.0, 0.0},
    {2.1992453141224457, 16914.485746396822, 1.1347610130496514978, 7.2482024919989693598e-2, true, -5.9481415450976098122e-2, -7.5563820886593443546e-2},
    {2.1763471247410329, 28167.902949547708, 8.6955340701074683821e-1, -1.5485451239394430943e-1, false, 0.0, 0.0},
    {2.7973901241426216, 27844.587517896372, 9.3263104568065861158e-1, 1.5710115707018872655e-1, false, 0.0, 0.0},
    {2.9959447760170623, 18849.868090451742, 9.1185310679240838816e-1, 5.5080253175093286132e-3, false, 0.0, 0.0},
    {2.9832039623077025, 8835.3012313069012, 9.6623512345552531656e-1, 1.3092130712859134039e-1, true, 1.9987952231344965588e-2, -9.0192773105941783439e-2},
    {1.1719888481206691, 5773.2837565677801, 1.188519122481830549, 5.6179132270786742706e-1, false, 0.0, 0.0},
    {2.2077591532208647, 25562.555947379009, 1.200043242438842444, 9.4534491752496585479e-2, false, 0.0, 0.0},
    {0.52577454446059435, 25784.692512652891, 7.4518677548402377365e-1, -1.9328312125009270974e-2, false, 0.0, 0.0},
    {0.74754762799768781, 22330.979119507345, 5.3685496736167344872e-1, 2.8384880583694409214e-1, true, 8.1648631690263141559e-1, -9.8630059391037701798e-1},
    {1.6333349125951968, 22255.810587650336, 8.2154508981560898631e-1, -2.4933957111895662587e-1, false, 0.0, 0.0},
    {1.950342476120611, 19715.492316738801, 1.4031484851485236179, -1.2508400512347060014e-1, false, 0.0, 0.0},
    {1.6880203246431376, 9501.5569308874165, 9.2652305998786237512e-1, -3.3037438237097595217e-1, false, 0.0, 0.0},
    {0.67420102117939429, 12760.973736061893, 1.1790610800521987097, -5.9976535940037920009e-1, true, 3.9194897930932651235e-2, 3.8761279067259615143},
    {2.4419164705645753, 16074.465065835864, 8.6063780442366783126e-1, -1.13751472027908264e-1, false, 0.0, 0.0},
    {2.5954293846569905, 10778.585797736683, 1.1461009425706105984, -4.7795523360692577636e-2, false, 0.0, 0.0},
    {2.4619776984368436, 29176.542667166581, 8.4939374891441126882e-1, 1.4627469322102881517e-1, false, 0.0, 0.0},
    {0.59419316086250207, 15418.915486728905, 1.2318538258328647457, -7.8613724841919468078e-1, true, 8.2242345566065139045, 3.7729936190772633456},
    {1.6361177276261145, 15330.242457238402, 9.2084394563541355808e-1, -2.2254287841150590932e-1, false, 0.0, 0.0},
    {0.64561479012975975, 18024.210218184315, 3.9568054490496950537e-1, 4.7337967602336117247e-2, false, 0.0, 0.0},
    {1.9073808599436735, 27348.521547020751, 1.4825092924371856361, -1.4539767098490845757e-2, false, 0.0, 0.0},
    {1.3105199003708972, 21906.304690401128, 6.3268090008300390909e-1, -4.3441509993613434771e-2, true, 3.4670723782409689356e-1, 1.2193812639011803985e-1},
    {1.19225187040698, 20130.385212007466, 5.9129558098842145896e-1, 3.8139312782457629417e-1, false, 0.0, 0.0},
    {1.3014009851079074, 16186.919453014643, 8.1530387199653392197e-1, 2.7831753779868720942e-2, false, 0.0, 0.0},
    {1.8040641041709997, 5509.6432838114297, 9.4073875573069664498e-1, 1.080099609186887953e-1, false, 0.0, 0.0},
    {2.0381175371413649, 14439.251072930207, 1.1005064065451203545, 3.484710594392289608e-1, true, 5.6336271462914585334e-2, -3.690078697425946358e-1},
    {1.8410776452487796, 25959.625494292894, 1.1179807751748038715, 3.291421786142966429e-1, false, 0.0, 0.0},
    {2.9933772332526662, 13901.079551677347, 8.6499203212483557809e-1, 4.4297986927685169531e-2, false, 0.0, 0.0},
    {1.4034518304648147, 21711.442171273469, 9.1655160258680655983e-1, -7.6660243901992916237e-1, false, 0.0, 0.0},
    {2.699314856862371, 4911.7894395789353, 1.1168011925837633153, 1.8434064368646759884e-1, true, -8.729980571369585007e-2, -1.5954221073486421586e-1},
    {1.1698303698591856, 25878.489213157307, 1.044613291487986683, 9.513619459801547369e-1, false, 0.0, 0.0},
    {2.143125919515521, 5519.7767914380565, 1.3325660047943429342, 8.6726012887980666444e-2, false, 0.0, 0.0},
    {1.7595417835325864, 27662.062957078921, 7.2428834095565919275e-1, 2.4801346409074822447e-1, false, 0.0, 0.0},
    {2.5016943717045081, 28815.241790568532, 1.0696179039145723441, 1.1137376756973967269e-1, true, -5.4146391131209837332e-2, -6.0817943129608820764e-2},
    {2.2014787640059934, 14268.187843908618, 1.3053152739583139247, 8.2104409681365574329e-2, false, 0.0, 0.0},
    {1.6466257327020482, 22403.191106570837, 7.3797885160886262055e-1, -1.4323545437057911441e-1, false, 0.0, 0.0},
    {0.45450826332706368, 29244.613509744646, -8.9633663215233269512e-1, -1.3244254347237975559e-1, false, 0.0, 0.0},
    {2.2842012340456033, 23278.026129497943, 1.2919952238238615773, -2.8792107017476576112e-2, true, -2.4884124215479583355e-1, 3.9816753266571488217e-2},
    {1.0623405850866448, 1232.3078611134024, 1.0137683709690032296, 3.7106206749804112757e-1, false, 0.0, 0.0},
    {1.4265641976389554, 26500.557106552478, 6.3813852847258364848e-1, -3.0075287979385810637e-3, false, 0.0, 0.0},
    {1.1768945207825126, 10913.959289299915, 1.3771831429048705388, -4.7508692760819204721e-1, false, 0.0, 0.0},
    {2.1208680226181009, 13857.133452605, 9.0382821615330401955e-1, 2.3538926567479120341e-1, true, 1.1367257024181493562e-1, -1.5975253648055008145e-1},
    {2.0674825380940001, 6138.007642032595, 1.1179348988041111342, -3.8827416073945860011e-1, false, 0.0, 0.0},
    {0.71113312794700123, 25563.018325608064, 2.433401209614715175, 1.673301137840296396, false, 0.0, 0.0},
    {1.0685120802728312, 18023.939931727607, 5.7253873449356937496e-1, -8.0933249985957171088e-2, false, 0.0, 0.0},
    {0.89541512934151735, 10453.727382006944, 5.520097900845962128e-1, 1.9092196582342034755e-1, true, 1.2231580048021385652, -3.5358971863618855019e-1},
    {0.56731436050493889, 28045.45445916984, 1.0745557393774873646e-2, 7.3290953787016310785e-1, false, 0.0, 0.0},
    {2.8958459320077088, 10218.794029233713, 9.3258732512413220904e-1, -6.3116006383954543615e-2, false, 0.0, 0.0},
    {2.6913545157318057, 16725.18433908248, 1.1056133301173454255, -1.4090958476457726529e-1, false, 0.0, 0.0},
    {2.0453155285741458, 8254.9192226950727, 7.6207712569583930917e-1, 8.5240178240279848337e-2, true, 2.1771377963432195076e-1, -6.4308166043978761868e-4},
    {2.4823578965128026, 13947.242236177002, 8.2270661742257116519e-1, 1.5112620349435893823e-1, false, 0.0, 0.0},
    {0.72188281094321261, 15766.459251931605, 7.1287399773389094233e-1, 1.3955989983975882796e-1, false, 0.0, 0.0},
    {2.5726434510882434, 17219.960134371133, 9.6257653974066115177e-1, 1.7691838913550071047e-1, false, 0.0, 0.0},
    {2.3551462247841761, 27473.190978641582, 9.4716307178261375078e-1, 2.3037280111311857482e-1, true, 9.5660306605146919583e-2, -1.4744700726610528176e-1},
    {2.8033654625491602, 10566.46037198362, 8.6771613647444635712e-1, 1.1631460451823266004e-1, false, 0.0, 0.0},
    {0.90203253090889957, 12612.732758088699, 3.7295918531168360832e-1, -2.6167918348936058716e-1, false, 0.0, 0.0},
    {0.89454599513906241, 5484.7177929324826, 3.6156248589729577015, -1.4838924285550467284, false, 0.0, 0.0},
    {0.5022173330279569, 4665.0063719817699, 5.4370156567556656e-1, -6.9534255913751038659e-2, true, -1.299896819920965222, 3.5465780433913885112},
    {1.7761813276610963, 14252.5571897266, 1.0153801592345658774, -2.7442605138863795445e-1, false, 0.0, 0.0},
    {2.234155769785755, 13192.86128630241, 8.4125288241010190391e-1, -1.4771110532218441032e-2, false, 0.0, 0.0},
    {0.59924709503524698, 2803.641355833679, -6.6928274882264895917e-1, -6.8389342670337961144e-1, false, 0.0, 0.0},
    {1.9083058123688614, 21018.589026508958, 1.0156918088594098575, 1.9983647962111943847e-1, true, -9.9418078018210779105e-3, -1.1179303354336311919e-1},
    {1.4087420693973973, 24936.155995887573, 1.4591397691913244333, 3.2036045462385011949e-1, false, 0.0, 0.0},
    {1.798271930578228, 21091.994492109079, 1.1332013323873762546, 4.4831035979345101146e-1, false, 0.0, 0.0},
    {2.2954507105203326, 22984.684330260527, 8.7101341624303460879e-1, 1.6251356004297226855e-1, false, 0.0, 0.0},
    {2.0408361461446609, 23202.505543429928, 9.3869601910742822919e-1, 1.8754536933341676424e-1, true, 6.8781630198790903872e-3, -1.3867141677650878696e-1},
    {1.2224808410254282, 13029.073670368913, 7.3689029822582083956e-1, -4.984573538989745865e-1, false, 0.0, 0.0},
    {1.4508124175937596, 22953.621332252424, 7.665621887231167708e-1, -3.1643354600498480288e-1, false, 0.0, 0.0},
    {0.45771872722991735, 15331.11935133107, -1.1587438719996315636e-1, -1.3853479922964985041, false, 0.0, 0.0},
    {1.5428369520014904, 27753.955636780771, 8.9797572041167940697e-1, 4.4247803581191420226e-1, true, 1.3981339889158136859e-1, -3.2621421662714840756e-1},
    {1.2157997600567367, 26881.585822837158, 6.6372503408520420829e-1, -1.0454540557268694928e-1, false, 0.0, 0.0},
    {1.8792971335743016, 19854.087060242906, 8.2403694860163312992e-1, -1.8260782040396715438e-1, false, 0.0, 0.0},
    {2.7170140702282728, 4803.7303449141546, 1.1960015650013510974, 1.0972410972582820205e-1, false, 0.0, 0.0},
    {0.53079460556539226, 6740.8216414793851, -2.3848114235901761861e-1, 5.9251648482400716803e-1, true, 2.5603099495649468545, -1.0339546777882341881},
    {1.1095470853753524, 2796.0877623036849, 9.3654725495835355106e-1, -3.8828738564711716376e-2, false, 0.0, 0.0},
    {1.4199758765199322, 26593.985043897253, 1.3141567059559182068, 4.4596630499308389572e-1, false, 0.0, 0.0},
    {1.8909980925764649, 10414.616221627684, 1.3613620880923456259, 2.9380741998684927846e-1, false, 0.0, 0.0},
    {1.9997655304895852, 24715.25711586235, 7.2193462353455496003e-1, 1.6879298658920409109e-2, true, 1.9142701266293210101e-1, 1.1692718843365708246e-3},
    {0.90373434639652239, 13393.025906863579, 4.2573098617158870852e-1, 2.1890414354934760876e-1, false, 0.0, 0.0},
    {0.71146178967957874, 20599.176638150679, 3.6014315704986230643e-1, 6.2214657764277063664e-2, false, 0.0, 0.0},
    {0.52580996450946516, 13022.017108006246, -5.3940418044987901679e-1, 5.5699863646771399079e-1, false, 0.0, 0.0},
    {1.6100157251259062, 1838.953684472553, 1.0254613423949798625, 3.9475121865348928672e-1, true, 1.2263590378196846099e-1, -4.171172571744925868e-1},
    {1.1767710022499926, 3100.1684295243676, 2.7943664072249193214, -9.3445242568336119947e-1, false, 0.0, 0.0},
    {1.1428966573875707, 20576.412270794437, 9.3303240094637442828e-1, 8.3291255407231794511e-1, false, 0.0, 0.0},
    {2.0230136165310659, 26122.714321700194, 9.0957798104846941281e-1, 2.0402903735243847524e-1, false, 0.0, 0.0},
    {0.68461749524165971, 26810.804511754206, 6.3893750029991416094e-1, 5.1850668161308548979e-1, true, -6.8480585500631045372e-1, 4.0613411550632761818e-1},
    {2.3133090282341535, 23591.611853886032, 9.2684225429316716955e-1, 7.4063650231992078327e-2, false, 0.0, 0.0},
    {2.7249183836812745, 15708.07819787462, 1.0478911357826891234, 1.522415139748426237e-1, false, 0.0, 0.0},
    {0.80790334560757238, 11815.183345210264, 7.808654380537728844e-1, -7.1876069972438409862e-2, false, 0.0, 0.0},
    {0.7149831150659347, 12843.684849364052, 6.557656743462986217e-1, 1.4955903979206667974, true, -1.8396521081494975673e-1, -1.880424254513613457},
    {2.9445658002291588, 4236.0727933764301, 9.3509864208828787489e-1, -7.5847421131399940143e-2, false, 0.0, 0.0},
    {1.3556281950420197, 20080.880524894128, 9.1824316534453031219e-1, -4.1527909692732418667e-1, false, 0.0, 0.0},
    {0.49737361254696494, 12099.362783076504, 1.534428501476058792, -6.686692499717219467e-1, false, 0.0, 0.0},
};

}  // namespace lfb::oracle
