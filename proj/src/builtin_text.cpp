// SPDX-License-Identifier: Apache-2.0
// Original sample prose in an eighteenth-century register. Used only to
// train the background character model of the synthetic corpus generator.

#include <string_view>

#include "textreuse/synthbench.hpp"

namespace textreuse {

namespace {

constexpr std::string_view kSample = R"TXT(OF THE RISE AND PROGRESS OF COMMERCE.

It has often been observed by those who write upon trade, that a nation grows rich not by hoarding its gold, but by the industry of its people, and by the free exchange of whatever the soil and the labour of men can produce. The merchant who carries corn from a plentiful province to one where the harvest has failed, does more service to mankind than the miser who locks a thousand guineas in his cheſt. Yet the vulgar opinion has ever inclined the other way; and princes, no leſs than their subjects, have imagined that a kingdom is impoverished whenever money passes over its frontier.

Let us suppose a small island, cut off from all intercourse with its neighbours, and furnished with every necessary of life in moderate abundance. The inhabitants will labour, but they will labour without spirit; for what motive can excite them to raise more than they consume, when there is no market for the surplus, and no foreign luxury to tempt their desires? Open a single port to the ships of strangers, and the whole face of the country is changed. The farmer now clears the waste ground, the weaver doubles his looms, and the fisherman ventures farther from the shore; every man perceives that the fruit of his diligence may be turned into some conveniency which he never before enjoyed.

OF MORAL SENTIMENTS.

When we consider the actions of other men, we are apt to judge of them, not by any fixed rule of reason, but by a kind of sympathy with the feelings of the persons concerned. A generous deed pleases us before we have reflected upon its consequences; a base one disgusts us, though it may chance to produce some public benefit. Hence it happens that the same action is praised in one age and condemned in another, according as the manners of the times dispose the spectators to enter more or less warmly into the passions of the agent.

There are philosophers who maintain that all our approbation springs from self-love, and that we commend virtue only because we expect to profit by it. But this system, however ingenious, will hardly bear examination. Who ever felt his heart warm at the recital of an ancient battle, fought two thousand years ago by men whose very names are half forgotten, from any hope that their courage would advance his own interest? The pleasure we take in such stories is plainly disinterested; and it proves that nature has planted in our breasts a principle of benevolence, feeble perhaps, and easily overpowered, but real and universal.

OF THE STUDY OF HISTORY.

Nothing can be more useful to a young gentleman than an acquaintance with the history of former times. There he may behold the folly of ambition, the instability of fortune, and the slow but certain reward which attends prudence and moderation. He will learn that great empires have fallen not so much by the sword of the enemy as by the luxury and corruption of their own citizens; that laws are of little force when manners are depraved; and that liberty, once lost, is seldom recovered without much blood and many years of confusion.

The historian ought above all things to be impartial. He should relate the faults of his own party with the same freedom as those of its adversaries, and should never suffer his zeal for a cause to lead him into the suppression of any material fact. It must be owned, however, that this rule is more frequently praised than practised. Most writers of our own country have taken a side in the quarrels of the last century, and their narratives are rather pleadings than histories; so that a reader who would know the truth must compare many accounts, and weigh the character of each witness before he gives credit to his testimony.

OF MIRACLES AND TESTIMONY.

A wise man proportions his belief to the evidence. Where experience has been uniform, he expects the event with the greatest assurance; where it has been variable, he proceeds with more caution, and balances the opposite instances against each other. Now the testimony of men is itself a species of experience, and derives all its authority from our observation of the general veracity of mankind. When therefore a witness reports something wholly contrary to the ordinary course of nature, we must set one experience against another, and ask which is the more probable, that he should be deceived or should deceive, or that the fact which he relates should really have happened.

OF NATURAL PHILOSOPHY.

The modern philosophers have made great discoveries by the simple method of trying every opinion by experiment. They do not sit in their closets and spin systems out of their own brains, as the schoolmen were accustomed to do; they go abroad into the fields, they examine the stones and the plants, they measure the motions of the heavens with instruments of wonderful exactness. By these means the law of gravitation has been established, the nature of light and colours explained, and the circulation of the blood demonstrated beyond all reasonable doubt.

Yet it would be vain to suppose that the whole of nature will ever be laid open to our view. Every answer that we obtain from her raises some fresh question; and the more widely the circle of our knowledge is extended, the larger is the circumference of darkneſs which surrounds it. A modest inquirer will therefore be content to advance a little way, and will leave to posterity the pleasure of completing what he has begun.

OF TASTE IN WRITING.

The beauty of a discourse consists chiefly in a just proportion between the thought and the expression. A writer who crowds his pages with ornament, who cannot mention a river without a nymph nor a morning without the rosy fingers of Aurora, may dazzle the ignorant for a season; but the judicious reader soon grows weary of such finery, and longs for the plain sense which it serves only to conceal. On the other hand, a style too naked and familiar loses the attention of the mind, which requires some degree of elevation to keep it awake.

The best models in this kind are the ancients, whose works have survived the revolutions of so many ages, and still please in every country where letters are cultivated. Their excellence does not lie in any particular trick of language, for translations preserve a great part of it; it lies rather in good sense, clear method, and a certain natural simplicity which it is much easier to admire than to imitate.

OF PARTIES IN GENERAL.

A free government can hardly subsist without some division of opinion among its members; but when the division hardens into settled parties, each with its own newspapers, its own clubs and its own heroes, the public good is too often forgotten in the heat of the contest. Men who would never lie in private will repeat the grossest falsehoods when they are told in favour of their side, and will refuse to believe the plainest facts when these are alleged by the other. The wisest course for a moderate man is to examine every measure upon its merits, and to give his support where reason directs, without regard to the name of the minister who proposes it.

OF THE POOR AND THEIR RELIEF.

The condition of the labouring poor deserves the serious attention of every legislator. In years of scarcity their wages seldom rise in proportion to the price of bread; and a family which in ordinary seasons can subsist with decency is then reduced to the parish, or driven to wander about the country in search of employment. Some have proposed that the magistrates should fix the price of provisions; others, that public granaries should be built and filled in years of plenty. Both expedients have been tried in various places, and neither has been attended with the success its advocates expected.

It may perhaps be found upon examination that the surest relief of the poor is a flourishing trade. Where manufactures are numerous, the demand for hands is constant, and a man who loses his place in one workshop easily finds it in another. The farmer, too, sells his produce at a better price when there are many mouths in the neighbouring towns; and the landlord receives a higher rent, which he spends again among the tradesmen of the county. Thus the prosperity of each rank flows into every other, like the waters of a spring which refresh the whole valley through which they pass.

A LETTER TO A FRIEND IN THE COUNTRY.

Sir, I received yours of the fourteenth instant, and am heartily glad to hear that your health is mended, and that the waters have done you so much service. Our town is very dull at present; the parliament is risen, the players are gone into the country, and there is nothing talked of in the coffee-houses but the price of stocks and the rumour of a new war with Spain. I have sent you by the carrier the books you desired, together with a pamphlet upon the late dispute concerning the national debt, which I think you will find ingenious, though I cannot agree with all its conclusions. My wife desires her compliments to you and to Mrs. Ward, and I remain, dear sir, your most obliged and humble servant.

OF GARDENS AND PLANTING.

There is no amusement more suitable to a country gentleman than the care of his garden. It exercises the body without fatiguing it, and employs the mind without perplexing it; it is innocent in itself, and useful in its effects, since the improvement of our own ground furnishes an example to our neighbours, and the fruits of our labour may be shared with the poor. The taste of the present age has happily rejected the stiff parterres and clipped hedges of our ancestors, and prefers a more natural arrangement, in which the winding walk, the irregular grove, and the open lawn imitate the agreeable disorder of the fields.

OF EDUCATION.

The first care of a parent should be to form in his child a sound body and a docile temper. Learning may come afterwards, and will come the more easily if the foundation has been rightly laid. Many a boy has been ruined by being kept too long at his grammar, and made to hate books before he could understand the use of them. It were better that he should learn a little with pleasure than a great deal with disgust; for curiosity, once awakened, will carry him farther in a year than the rod of the schoolmaster in seven.
)TXT";

}  // namespace

std::string_view builtin_source_text() { return kSample; }

}  // namespace textreuse
