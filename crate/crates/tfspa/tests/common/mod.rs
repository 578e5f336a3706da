//! Frozen reference data shared by the integration suites.
//!
//! Produced offline by an independent implementation of the cipher
//! validated against its published ECB test vectors.

#![allow(dead_code)]

pub const SUBKEY_VECTORS: [(&str, [u32; 40]); 31] = [
    (
        "00000000000000000000000000000000",
        [
            0x52c54dde, 0x11f0626d, 0x7cac9d4a, 0x4d1b4aaa, 0xb7b83a10, 0x1e7d0beb, 0xee9c341f,
            0xcfe14be4, 0xf98ffef9, 0x9c5b3c17, 0x15a48310, 0x342a4d81, 0x424d89fe, 0xc14724a7,
            0x311b834c, 0xfde87320, 0x3302778f, 0x26cd67b4, 0x7a6c6362, 0xc2baf60e, 0x3411b994,
            0xd972c87f, 0x84adb1ea, 0xa7dee434, 0x54d2960f, 0xa2f7caa8, 0xa6b8ff8c, 0x8014c425,
            0x6a748d1c, 0xedbaf720, 0x928ef78c, 0x0338ee13, 0x9949d6be, 0xc8314176, 0x07c07d68,
            0xecae7ea7, 0x1fe71844, 0x85c05c89, 0xf298311e, 0x696ea672,
        ],
    ),
    (
        "147de61a8c3e7b79f5dbfc380fbbc63f",
        [
            0xa536df4f, 0x7254b66f, 0x0e44217d, 0x71777879, 0x46405791, 0x2a09909b, 0xe34d75a6,
            0x2a5b7ff0, 0x8a9f865e, 0x7f867c94, 0x61089ad5, 0x39d49ef8, 0xd07329ea, 0x41916bee,
            0x38c2d37b, 0x97d42669, 0xe60d39be, 0x7c0f361f, 0xd109a016, 0x301907ff, 0xace26c06,
            0x23957a33, 0x00947f1b, 0x448772cf, 0x8c89d6e5, 0x6c7cd0f4, 0xf346df58, 0x02cb0bab,
            0x1c5ea5fe, 0xf7e90c43, 0x453a7fd7, 0xfc451fa5, 0xf4fa612b, 0x9463e4d5, 0xbc26da8c,
            0x9504bcf6, 0x39d2c82f, 0x8b5222bc, 0xd76d57ac, 0xe303c7b0,
        ],
    ),
    (
        "b8b4fe3a1cde1b7890ed564d4488a794",
        [
            0x2dec01bd, 0x228c6716, 0x6e35011b, 0xffca1e10, 0x3766ddd8, 0xcdffdc07, 0xcc6b4a30,
            0x0c06b72b, 0xe6ec41b9, 0x2815ffed, 0xf1a32851, 0x68ceae65, 0xabf8ae23, 0x3f9a0bc1,
            0xdb06ddf1, 0x6e65a206, 0xa1f6d901, 0xe89d4755, 0xb4155657, 0x3e6ea85d, 0x9339fe34,
            0x0c23e536, 0x7f19ef2c, 0x4677dbc7, 0xe9535c78, 0xa926bace, 0x0af8971e, 0xc3d9ef52,
            0x837a820c, 0x5acc9237, 0xb155ea65, 0x0e6a93e6, 0x23232110, 0x183a1da8, 0x4ab4ddb8,
            0x72b11b25, 0x6db8f006, 0x10276410, 0xa89db490, 0x3fafe150,
        ],
    ),
    (
        "631ce9c31e6428339d99a1c280900006",
        [
            0xf41f790c, 0x5eab9348, 0x91c8b31e, 0x254cf0a3, 0x9e853e09, 0x2a68a066, 0x58685f3f,
            0xba6ae2e8, 0x3f9312f3, 0xee50770e, 0x3ed76f95, 0x14334850, 0x4da12174, 0x679e330f,
            0x103c9299, 0x11bf88fc, 0x6e0f18fc, 0x86c57deb, 0x8b7962df, 0xc2828671, 0x495137d5,
            0x3f4ba60f, 0x91884fac, 0xcf53de9f, 0x00b19805, 0x78bb5bcd, 0xca49fd0c, 0x4c3d6aca,
            0xdd835bb4, 0xfa2fd7e2, 0xde95dff8, 0x6975ff29, 0xc5881c1e, 0xfa6f938b, 0x10c3419b,
            0xf31da816, 0x2621e8a7, 0xd9cef45b, 0xe5b1306a, 0x14975b05,
        ],
    ),
    (
        "253db855f446313f99835d9a88cb8fd0",
        [
            0xed7ddfa7, 0xe0306aef, 0x4de9f93e, 0xb400dbce, 0x2ca9d858, 0xafa769cb, 0xea020080,
            0xbbca25d5, 0x01d4b009, 0x8344be13, 0x2a05f8c9, 0x46fc3bbd, 0x39b656d1, 0xaf0bfa5b,
            0xc7e31109, 0x89b6c63e, 0xdb5b95b5, 0x216fc9b6, 0x53d53104, 0x8e530f10, 0x64e2964d,
            0x1c745b94, 0x7cc579c1, 0x134e4d95, 0x508d071a, 0xd0cb83c4, 0xde46ac42, 0x913dfe3a,
            0x4d715257, 0xc016d38c, 0x70925070, 0xe0478020, 0x688a5c8f, 0x2a79926d, 0x0e829908,
            0xf11dcd26, 0xf5663eb3, 0xd4a9def0, 0x08b552e3, 0x2d05c3ca,
        ],
    ),
    (
        "e9e67e96a02e977bcfb6e22d293ce96f",
        [
            0x25948ef8, 0xe534a7c6, 0x8113240d, 0xe7cdd85f, 0xa4b0a168, 0x088086e7, 0x1983e74e,
            0xc0d2a84e, 0x91f7ec31, 0x3b3ff140, 0x4892fa6d, 0xb721a1d1, 0xe14abdd4, 0xf0849f16,
            0xe7b443e0, 0xfeea4186, 0xeba5b3e2, 0xd8d66081, 0x212f3b25, 0xee0c9c63, 0x8cbb2041,
            0xb23177a2, 0x37e66ae9, 0xc7facc7d, 0x43fdeda0, 0xb6ab5dfb, 0xf6656acd, 0x8714d1a2,
            0xf67189e5, 0xe0b4406d, 0xad91e94b, 0x04e82513, 0xbf98ba0e, 0x76ebb42d, 0x8afa50ce,
            0xe2d7fbf6, 0x2cf9e9c1, 0x280e5cb5, 0x4bd64712, 0xfd45b210,
        ],
    ),
    (
        "5f07a885067a07f7763201700e85f80f",
        [
            0x3df78762, 0x8a19219a, 0x4450ed4a, 0x8cc7057c, 0xbbdcfed4, 0x2ff73fda, 0xe6f5b722,
            0x43b8d518, 0x5c6ecdbd, 0xfedae572, 0x66076eb0, 0x2aac225f, 0x3bbc1286, 0xc8743613,
            0xff7774ea, 0xa512b57b, 0x09d65a9c, 0x1f4982a5, 0x61e9b720, 0xa420947d, 0x319cfb78,
            0x6190930a, 0xe94b8ac3, 0x0ed6c678, 0xfb0f0b0f, 0x6d75dc35, 0xb5718384, 0xd1c4602f,
            0x6244e7ec, 0x77fc22f1, 0xc7bafbd0, 0x3aa53b4c, 0xa4a6c2cf, 0xb1525ad8, 0xdd55629e,
            0x4a036419, 0x7e1623a2, 0x0f667929, 0xd91146bf, 0x1a3ddc26,
        ],
    ),
    (
        "c68bcb6e7dcee42d17be2a9d553fed1a",
        [
            0x7c3a8bd6, 0x2af51fdc, 0x32f48ecf, 0x6390f456, 0x991b471b, 0x2c06169c, 0x3b2daebe,
            0x3e9803e3, 0x9fd3c3a3, 0x88b4e185, 0x6f1749ac, 0x536845f9, 0x9446f462, 0x8d6300aa,
            0x042ef0f0, 0x203ddf6b, 0x18242a3c, 0x95b928cb, 0x6f778f62, 0x71dbe24c, 0xa8a5fe25,
            0xf300efa3, 0xd5675aeb, 0xda98a754, 0xfcd328ef, 0xdec75e97, 0x717e153b, 0x40e422e3,
            0xfdbf196d, 0x267bc7bd, 0x4cc9c5b2, 0xd765f28e, 0x0c7210f7, 0xb403b3a6, 0x4cd221b6,
            0x4abe9275, 0x83c79dd0, 0x5cef8ba0, 0x1967a696, 0x04f10a5b,
        ],
    ),
    (
        "567ccc1cdd2e2fb14e56b6c7d02ce433",
        [
            0xb04257f4, 0x492cf191, 0x0e125e5b, 0xd3cee016, 0x3e3a2947, 0x5d6ed110, 0x85bb978d,
            0x6b26a508, 0xf6344c29, 0xe7073a19, 0x7ccb2991, 0x6e255130, 0x3d4be931, 0xad0143a4,
            0x2f9e9daf, 0x572e9c80, 0xaf2a9c07, 0xfbf90591, 0x5bde114d, 0x5747a445, 0x3e5a1dec,
            0x7596538d, 0xe0a5065f, 0xf57ea774, 0x7bd69b87, 0xe8beba90, 0xed9b6031, 0xd30491d4,
            0x9a45f1e8, 0xe7888b60, 0x01df1843, 0x2647d290, 0xdb5a03e5, 0x140aba9f, 0x7bca6e16,
            0x035ec5d0, 0x48d9980d, 0xc953cb37, 0x69c25c4c, 0xd5f2e71e,
        ],
    ),
    (
        "652e134d608e0cdcd75759f9f5c82645",
        [
            0xb1da5e48, 0xd5b0f4cc, 0x4e764026, 0x455b40d5, 0x99c2be55, 0x10f7ddf6, 0xb38eb486,
            0xbf3fa099, 0xa0ae87de, 0xe37183b0, 0xb589be6c, 0xee494bda, 0xbdeb62d1, 0x2f86532a,
            0xfa74cc15, 0xf83ed12c, 0xb08a4598, 0x9bfb398f, 0xb7766b39, 0xa0f56603, 0x72dfa82d,
            0x7efa1aad, 0xa041aa81, 0x20c67a41, 0xebca25c3, 0x87c4a057, 0xe6152edf, 0x59b78311,
            0xbba1b1c8, 0xc0dba662, 0x21c755bf, 0x5eee926e, 0xa7f7b8b6, 0xbe08e83c, 0x99cf1048,
            0xdb0ad6f7, 0x3336ffac, 0x9c0cb141, 0x9e71f4fe, 0xd1e60b94,
        ],
    ),
    (
        "33dafa123de5145844770f725490122d",
        [
            0x59441516, 0xaaf4bd1f, 0x8b6cc2e0, 0xa8b30c15, 0x142edf69, 0x457b65a1, 0x61bc722d,
            0xd180820d, 0xdbb5eb84, 0x3b0fef42, 0x167f9125, 0x635048fd, 0x6bf2155a, 0xf0492f14,
            0xd5612d1c, 0xa7801f02, 0x020213c4, 0xd0ceb333, 0x17d8e7bb, 0x35d60f4c, 0x3ab99810,
            0x5f407449, 0x9e44425e, 0x37326595, 0xb37e145a, 0xb2c858be, 0x060a5368, 0xa07b295e,
            0xc32bf478, 0x2c59ca92, 0xfed47e09, 0x5d00dcab, 0xbe53edec, 0x97664011, 0xcccb33c9,
            0x64b8338e, 0x640f3a91, 0xfa5c191e, 0x8610df7d, 0xb34f03f4,
        ],
    ),
    (
        "ef3f303ebfcd4bbe6fee9e44492e3fde0eaa6b7ef2b64bfc",
        [
            0xdb3af63b, 0xb334f509, 0x3d8457ba, 0xc4aae16e, 0x80f02d56, 0x576d5744, 0xed8dbc4a,
            0x3a61cc9a, 0xcb449662, 0x474736bb, 0x4cd27ea7, 0x2719fa1f, 0x44107af1, 0xff4c05a3,
            0x1579113a, 0x2e24c99a, 0x38595b81, 0x60e21b42, 0xf40c8908, 0xc802b0e9, 0x4adc56ea,
            0xcdc7912c, 0xadd12aa4, 0xa5d0da0c, 0xea6e5100, 0xdb7c181c, 0xc172fa76, 0xbda20dec,
            0x881595d9, 0x72c70cce, 0xcd50aa36, 0x3216b6a5, 0x07d69c9c, 0x44f361d3, 0x8d1938fa,
            0x19e138f7, 0xa84f4aea, 0x01cf6ddb, 0x62d40ed9, 0x0f090ab6,
        ],
    ),
    (
        "c69ddd0140309a2631798b960d6b9dc580baa2d05e5c1792",
        [
            0x6b1fac62, 0x4ed25338, 0x14d2877c, 0xffa444ba, 0xc4fedffd, 0x567c9e8b, 0xe52d2afd,
            0x36c1f89b, 0x9d9844c5, 0x427e9d71, 0xd122eeed, 0x92ac5759, 0xd71bc549, 0x20644df0,
            0xde9fb39f, 0xf70700bb, 0xfd933044, 0xf6d75491, 0xd20249eb, 0x5463b4d1, 0x083b1100,
            0xadb35a80, 0x30195399, 0x49fffba4, 0x003667b2, 0x10714000, 0x68621a61, 0x756d6b27,
            0xdeb38e4b, 0xbd901b48, 0x81ad30d1, 0xe8173243, 0x18dd3ce5, 0x3c2d611e, 0xe6a65689,
            0x6ecdd747, 0x29cf1fb0, 0xec354d9e, 0xc49e279c, 0x08ea9424,
        ],
    ),
    (
        "15f6de63e542f389b6473e40da140c347dc413546846b927",
        [
            0x582bf285, 0x8d2a9b50, 0xf47fd795, 0x81cd737c, 0x99ff1d10, 0x3a85d05f, 0x6fe8aaa9,
            0xfd9578af, 0x91b07eb1, 0xedfe96e9, 0x3bb07d7b, 0xadd7fb65, 0x40d4c71a, 0xcb3d5d42,
            0x7e9b9951, 0xf5f901f6, 0x1c05e9cc, 0x98a66add, 0xd8595c14, 0x64fdc804, 0xe5b3be1d,
            0xefe54dff, 0x4ab9e0a9, 0x99c560fe, 0xf7974c90, 0x2828c418, 0x2e388c41, 0x88396b70,
            0xe2e68036, 0x08fb260c, 0x8cec957c, 0x5f5578ed, 0x0564384f, 0xe87c65cc, 0x049b155d,
            0xe8e4b473, 0x23bc33c2, 0x4cb17919, 0x48327160, 0x69fca92b,
        ],
    ),
    (
        "8d8f6b370c8c0ea41573d1b119419bd83b3b7fb09000226b",
        [
            0xa86f164b, 0x5ce5993f, 0xab7685fc, 0xaca0ee57, 0x0e84b72c, 0xc71f1afe, 0xc364bf12,
            0xae07cd8e, 0x63834999, 0x919eb880, 0xcce8f24e, 0xe9a9b0f4, 0x1c883ed4, 0x1255119a,
            0x625dc245, 0xdb62e12a, 0x1af51256, 0x1e757ad8, 0x82a9febc, 0xea82db7d, 0x70ff2e77,
            0xb56641bf, 0x50cc0acb, 0x2f9d636f, 0xdeb6f7fd, 0x944b7078, 0x22fa64e0, 0x1234caea,
            0x77c434c8, 0xf641a586, 0x0b73a860, 0xae642ed6, 0xee889b1f, 0x7bbc631c, 0xc987381a,
            0xbe71c00c, 0xe37d7043, 0x6ca2d93e, 0x0b377565, 0x65d572e0,
        ],
    ),
    (
        "31394bf91ee90d3270697d75cefd5e566eccb4bf64e3fcab",
        [
            0x558ff2e2, 0xdaf577ed, 0xdb240177, 0xa3446ad8, 0xcede147a, 0x001da2e8, 0xe7905aad,
            0x05b5c644, 0xd61fefd7, 0x8d4a09dc, 0xb8d2c26c, 0xe62a1da0, 0x5ece8fe8, 0xed636177,
            0x26e69004, 0x5229f560, 0x229e3495, 0x56358067, 0xfcfe8bd7, 0x3afe3e96, 0xd6615a43,
            0x5ecfdbce, 0x59c45a87, 0x04e2235d, 0x65aa91f1, 0xb239b126, 0x073a5e21, 0x6b93e420,
            0xa144a6bb, 0x6bf1d385, 0x88a92ab7, 0x439dd2e1, 0x162e4495, 0xeb01d765, 0xab9f6df0,
            0x202758cd, 0x947ac5af, 0x5718116b, 0x7522b3eb, 0x4c134aed,
        ],
    ),
    (
        "b7a5a5bd19e60a79ac1dc15f4d020646fb4824907e463653",
        [
            0x6759b837, 0x232a700a, 0x3befdcc7, 0x51598a86, 0x97e00e44, 0xd7b09f3e, 0x8277f793,
            0xe2a454e8, 0x5f27263b, 0x0785229c, 0xb50dc17c, 0x38a699ca, 0xbbf55a64, 0x1f5b3f4a,
            0x70c5525a, 0x031d4056, 0x9f80589b, 0xb16f0844, 0x73553d0d, 0xca379c03, 0xa6b6e0cb,
            0x7a646ee0, 0xbc5284e6, 0x7ddcaaa5, 0x923cde63, 0x1deb1930, 0xbfbb0fa3, 0x8ebf16d5,
            0xd13bdf80, 0x0f6a4d51, 0xc80ff0da, 0x7c7777e3, 0xdca33ade, 0x8357dd65, 0x5517839c,
            0x6d2d70a9, 0x8031ad7f, 0x92dac197, 0x47c679e1, 0x719af363,
        ],
    ),
    (
        "3cdd37018fdf805739141dccce39a17af52e6a50ff46ad5c",
        [
            0xe019d63a, 0x51507f08, 0x78872153, 0xbf77527a, 0x7bc3137d, 0xd7508d6e, 0xa929e38d,
            0x9e9479fb, 0x09f853f8, 0x91d3c591, 0xdcf5187a, 0xe6e3f7e3, 0xff914e35, 0x5093f8bb,
            0x7dc20a3a, 0xe2903736, 0x4176cd96, 0xe561e429, 0xe22f6aee, 0xbd27666d, 0xe05cff55,
            0xadc79c8a, 0x92bae806, 0xedebdd16, 0xaeb20093, 0x65809d4b, 0x120a34c8, 0xb84d2922,
            0x249db5b3, 0x805af53d, 0x5a7e9065, 0x68c951d2, 0x1161673c, 0xdb2bae8a, 0x4cc1d864,
            0x2704a920, 0xf1d186e2, 0x081d285a, 0x5f2e1802, 0x25c666dd,
        ],
    ),
    (
        "dee76b4fb1d3acb3dae29441bc9c10b43a3234177371e23d",
        [
            0x77d92851, 0x4cddb27d, 0xda36930a, 0xbdad47f7, 0x5d692b53, 0xc4d6bfe2, 0xf877301d,
            0x0ebbd659, 0x7c3eb227, 0x72fe46a2, 0x68748489, 0xc431a6c1, 0xbaf34f0e, 0x7ace6e09,
            0x4fdd1156, 0xae26e9e8, 0x9d20e44d, 0x1e75a742, 0x09e97923, 0x7fdccfc1, 0xb9a6ed92,
            0xc0a67eb2, 0x67bd4f40, 0xef0acbc1, 0x5a0f9a8d, 0x34f92490, 0x563fd559, 0xcd55375e,
            0x9e5578f5, 0x240b0012, 0x85025f0b, 0x032c1c4d, 0xb8248c9d, 0xa10ccf17, 0xfbf95457,
            0x310db71f, 0xff3a535c, 0x4e837065, 0x97182100, 0xf8feabf8,
        ],
    ),
    (
        "73f68d99f0f59fcd283255dcd077b1f737447adbb1364673",
        [
            0xa37e71e0, 0x73d876f1, 0xdb32dbc4, 0x4461a160, 0x729f06e0, 0x3978f6dc, 0xef23134d,
            0xfa5bcd75, 0xd36ef354, 0xd1980130, 0x5b12109a, 0x39b83556, 0xa0384c57, 0x2ec88e25,
            0x03e02d47, 0x8f975caf, 0xf027ff23, 0x711da8be, 0x522aec37, 0x79235f51, 0x773ebba0,
            0xe68eed7d, 0xbe128e42, 0x41e14776, 0x782a5a5b, 0xd0e9da45, 0x488e78a0, 0xed424e7b,
            0x3df6079d, 0x67dc1941, 0x6b1cc658, 0x649786a7, 0xdb84abc9, 0xf4a09878, 0xb55414b9,
            0xcb0d1960, 0x30cd0b5e, 0x34d6041a, 0x4da963c9, 0x17c24886,
        ],
    ),
    (
        "b481f5bf4d931a93134522b48220faf56637b4d9f1762a07",
        [
            0x4f3ad9f1, 0x46a2a5b3, 0x0d9f96b7, 0x1072f8e1, 0xcf66f474, 0x922a24d2, 0xe3317bb9,
            0x55f8b772, 0x52c039a4, 0x05e8256f, 0xd6a08d96, 0x3de7808b, 0x73d99092, 0x6a1bd28e,
            0xc02f5fbf, 0x7116f40c, 0xe68864c0, 0xeb1fb1c9, 0xe0a7c7f3, 0x1eeef8ad, 0xd64dc3e6,
            0x0e907b9a, 0xab5605b1, 0x0a348637, 0xebc513c0, 0x20fe188f, 0x1f549dd6, 0xfaa0662f,
            0x7ed4e3b9, 0x465075f9, 0x99d20894, 0xbc5214b7, 0x2fd3da54, 0x0a0cc7e1, 0x0bfe12f6,
            0x796660bf, 0x8426c27a, 0xb89d1cd5, 0x00cd5e80, 0x481fcfa6,
        ],
    ),
    (
        "beb8cce5a4910d3a6440b6b04dce1d0fa928a47ca4e3bb5da387aa6cdb048052",
        [
            0x9509fde7, 0x66a3423d, 0x65c28470, 0xeb32f08e, 0x0d5e14b3, 0x2964b774, 0x9b869db5,
            0xecb1d315, 0x24cbd1bb, 0xad6d1119, 0x2650adc3, 0x45504033, 0x761bea32, 0xc4870095,
            0x9f92acb0, 0x6c90660c, 0x4edd65db, 0xf1780f1c, 0x88dba1d7, 0x5ed83883, 0xc5d97e68,
            0xadec3449, 0x1fbdba62, 0x8fe27b59, 0x5984e746, 0x9ec0ddf3, 0xf90e5d8f, 0xa877b240,
            0xda98639b, 0xd41e0437, 0x3006e5ee, 0x2bc85b5f, 0xfeecf93d, 0x36b29b62, 0x06d4d6ff,
            0xf2ad5ebc, 0xc588cdd5, 0xf2a956bb, 0x41d55b51, 0xcaafbf0a,
        ],
    ),
    (
        "6dd0c52f12b9cccb8b8e3481331a546e7aaf458e69e0fa5c3c70c994338f72d3",
        [
            0xe6f807a2, 0x98fc2456, 0xf665a825, 0xac12c077, 0x0bc177dd, 0x2b6ccaeb, 0x1765552b,
            0xc1da10fd, 0xe0be72ef, 0x02eb538e, 0x194592ac, 0xde21aae1, 0x5524d7a7, 0x62c414e5,
            0x1b14428b, 0xffe27597, 0x86390db9, 0x007b267c, 0xd60c60f4, 0x96f9aa3b, 0xd4524f96,
            0x155ff6bf, 0x952d3fab, 0xbdb607f6, 0x5ee1796a, 0xcecb8783, 0x7d2cb736, 0x4029cea1,
            0x46657e72, 0x466a1b7b, 0x9335a991, 0xacf000e7, 0xe26f23d5, 0x8fe4cd09, 0xd6e35a9f,
            0x25a97d3d, 0x00e3573b, 0xc2b239c5, 0xdda46a4d, 0xdbe58968,
        ],
    ),
    (
        "48dc680247717cf17e6313e2b1c2d6e86c139bd49adf6cc0fb9390022c4c33b4",
        [
            0x00daed5f, 0xa3b9836f, 0x7b3fd17d, 0x567bf625, 0xba0ee436, 0xecd49c6a, 0x993265c1,
            0xf3d5ddf4, 0x9db3068c, 0x5b6cdb9b, 0xff680c35, 0xf25af179, 0x9689f41f, 0x36d4c9cc,
            0x4bebb344, 0x04fa374c, 0xd7064f45, 0x8a9c020f, 0x746be135, 0x8e013a2e, 0xe1ac3234,
            0xa02aa375, 0xc78f139b, 0xbca4692a, 0xdaf0fce9, 0xe7e99bce, 0x8995d921, 0xb384c86a,
            0x70230ac0, 0x62aaf738, 0x2e37a484, 0x8c625559, 0x239d6ed8, 0x1308d167, 0x727c5925,
            0x8d09d88d, 0x548e8322, 0x6befdd0c, 0x89b80583, 0x41c570e9,
        ],
    ),
    (
        "eb0cb77447ca2092669fc84fa141fd59967decef3e35c2ff887658cf1c9859ec",
        [
            0x75a8131e, 0x1e3bd1b6, 0xcde5f2cf, 0x10d03596, 0x88a2118d, 0x0ff6b7c0, 0x858a7979,
            0x64ff451d, 0x80f60ff2, 0x017ca5fb, 0x140c91a1, 0xd5131ca6, 0x0dd278eb, 0xaac362f1,
            0x2f455555, 0x5a26c20e, 0xc4143adc, 0x4c39c769, 0x6550e24b, 0xfa243d71, 0x47f46959,
            0x1d18d588, 0x37ec9171, 0x28c05ce9, 0x90bd5857, 0xd0250910, 0xde40d0df, 0xe92c9207,
            0xe038e4cc, 0xb4ec5f05, 0x6de3fbad, 0x40a9ae3f, 0x5e118b75, 0xf0eff9a5, 0x053c4714,
            0xe6aaf1a8, 0x6cd20757, 0x1c3cb3cc, 0x3e47a1de, 0x3c3b1b56,
        ],
    ),
    (
        "7eaf1fa467a48344c896e5bd32aa55fb4e08fbafcbf91fa74f2329d593326780",
        [
            0x29ef0f47, 0xe90fcc4a, 0xf56fb2c2, 0x4f562ee8, 0xd76433dc, 0x9ea9497c, 0x4668cb2e,
            0x9c424d4e, 0xddcb4673, 0x8ac0c4fc, 0x55ef15a0, 0x9cd1be42, 0x3c020c61, 0x6a5f3979,
            0x4336b474, 0xff5a3577, 0x0da6a8e7, 0x696af057, 0x5dd49c01, 0xea62a23a, 0x87730686,
            0x653d6170, 0xb57c55b3, 0x352d4c4a, 0xd3cc92ca, 0xed9ea80a, 0x7c1be377, 0x1f1f2876,
            0xe32c4137, 0x8eb20b65, 0x31c4327a, 0x01cdb27c, 0x162ab9a3, 0xf16c5cbf, 0x9423a785,
            0x9460cc74, 0x061fc8dc, 0xfb3be5af, 0x6f0f8718, 0xf816a918,
        ],
    ),
    (
        "ddf432e019105028d1597eb15906dbd861aba687c0ea919d3b0b295d2b23875c",
        [
            0xad2a4a9d, 0xc7545607, 0x47a19ffa, 0x9feab8fd, 0x41462337, 0xc51fdeb8, 0xee058c84,
            0xfb17bef8, 0x0c445f3a, 0xa61723c6, 0x478b6376, 0x21523082, 0xb8706ffc, 0xd2447d6f,
            0xb8c99334, 0xf20e7667, 0x90e377a9, 0xfe6de279, 0xcec5a164, 0xe9a6a954, 0x245fcc89,
            0x3fa75e8e, 0x35b2a08c, 0x45ba3b2e, 0xd5119d79, 0xcb74e1bb, 0xb9ddefc4, 0xcb42ea1c,
            0x0363ca87, 0xd1e2f8e2, 0x12168b1e, 0x15e51c8d, 0xad0c0732, 0xd4b91319, 0x4bbb2373,
            0x79255dbb, 0xd9b05d7f, 0xf78b0944, 0x8c141923, 0x9d7b318d,
        ],
    ),
    (
        "9e4cd5c69e1e691ba41bd5c9e084e4d29915d85d9f4c41a41f2d2411bd3a8aa3",
        [
            0x0bc776d8, 0x12240375, 0x9f13830d, 0xa16cf44e, 0x50c238d5, 0x73023525, 0xb6a4870b,
            0x7beb22ab, 0x8585d289, 0xde74889a, 0x184ca880, 0x138bdc59, 0xacea153f, 0x0848136d,
            0x36611d3c, 0xc1de17a5, 0xce95576a, 0xa0b13f3b, 0x4f5b0fd8, 0x50094dfb, 0xc94912bf,
            0x7af163af, 0xdb0cb7d3, 0x4948ded2, 0x2b8e8237, 0xebd431de, 0x74dc25c2, 0xf3c1ce5b,
            0xac2c931f, 0x2518fe70, 0xf3f4daa1, 0x722f5853, 0x2861c64d, 0xa0a9c4ff, 0xd998d637,
            0xe5011bf3, 0x48dceacd, 0x60cf8469, 0x13020c5f, 0x52f9039e,
        ],
    ),
    (
        "ed59c241b3e50e1f996a741ed905a7d75ad026879b96aa56b507f6714486d12e",
        [
            0x2aec0e65, 0xed4bfe1b, 0x47996e4d, 0xebb2ff79, 0x70901740, 0x1274e201, 0x8269cc4c,
            0x514464d5, 0x47aa739c, 0x3f0dd289, 0xab220e25, 0x09fdfdcf, 0xecefbabf, 0xc9bb8a6b,
            0xabedd83d, 0x1ea662fe, 0x914fbc7f, 0x8a36e79a, 0x19e65321, 0x3997f121, 0x4974647e,
            0x546c6eed, 0x16e7a896, 0x076eec89, 0x3ab5d545, 0x42d403d4, 0x13232411, 0x6eb0b0bc,
            0x12da9fa5, 0x4c31fa7f, 0x80e53379, 0x38a8fea6, 0x8d61dabb, 0x2cf930ac, 0x0eec3216,
            0x8a4642ea, 0x7305c2cc, 0x064e7425, 0x068deec8, 0xad5aefcc,
        ],
    ),
    (
        "3444a1956a629493438304dc549b71d0c57047473378bf522b73f6117e13e6d3",
        [
            0x4201a035, 0x8e59ab9c, 0x604f70ba, 0xbf2a7703, 0x23aa186b, 0xed4ceb6d, 0xece671ce,
            0x7d2fe90a, 0xc3f2e818, 0x67d8d312, 0x61cfb14e, 0x42438cf4, 0xca539838, 0x7c2273c6,
            0xfa49c991, 0x9e21bcd4, 0x114f62b9, 0x0f9e1dcf, 0xa0ac2e97, 0x4ddd7e17, 0x6a06e4f2,
            0x57875eb6, 0xe4934ddc, 0x9a6d30b7, 0x1a839e8c, 0x4c783850, 0xd5f731ea, 0x066dc899,
            0x62df12c1, 0x1626adb4, 0x4e25f81f, 0x1c983312, 0xe57c1dd2, 0xdf8851ec, 0xc83da886,
            0x075eee87, 0x5a0bb528, 0x0563c0fa, 0x208893cf, 0x6763a247,
        ],
    ),
    (
        "979c2ac23c5639721efba40e0319adabd2c423ee188f3c5ae4f5ae9c875bd426",
        [
            0xd01161f6, 0x09128402, 0x391fafde, 0xade98a83, 0xdb58e188, 0xdace953f, 0xafe1e330,
            0x0a425d1c, 0xc8e9bea6, 0xdc5664fb, 0xd2ab9546, 0xbc65c89f, 0x3185c17b, 0xdec32ac4,
            0xf1588379, 0xdf1481b7, 0xa460d8bf, 0xd4da4d0d, 0x89fdd37e, 0x659695f7, 0xbe3bab5f,
            0x4d57ded0, 0x6f71c540, 0x3a39811d, 0x67e36af2, 0xc7a1e108, 0x06b956ff, 0x289274aa,
            0x2fcd313f, 0x36893379, 0xb6bb6534, 0x6217385c, 0x4428cc6f, 0xa8624419, 0x8243d767,
            0xd6355c9b, 0x2558e2f3, 0xe1c3a1f2, 0xb67d52c1, 0x7dfb9783,
        ],
    ),
];

pub const SPOT_KEY: &str = "dfb3d4eb444ff9193c1d3446aa48b7c04c4a821f6a22d414";
// (subkey, lane, stage, v, w)
pub const SPOT_CHECKS: [(usize, usize, usize, u8, u8); 10] = [
    (0, 0, 3, 0x00, 0xa9),
    (0, 0, 0, 0xcd, 0x1f),
    (7, 2, 1, 0x30, 0x63),
    (13, 3, 2, 0x69, 0x77),
    (22, 1, 0, 0x95, 0x76),
    (31, 0, 2, 0x22, 0xae),
    (39, 3, 3, 0x27, 0x9d),
    (39, 3, 0, 0x03, 0xf4),
    (18, 2, 3, 0x12, 0xd8),
    (5, 1, 1, 0x7c, 0x7e),
];
