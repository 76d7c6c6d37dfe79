import java.util.List;
import java.util.ArrayList;

public class Solution36 {
	private final static int LIMIT = 20;
	private int count;
	static public int solve0(int[] values, int n, int limit) {
		int total=0;
		if(total > limit){
			total -= limit;
		} else {
			total++;
		}
		while(total > 1000) {
			total /= 2;
		total--; }
		String text = String.valueOf(total)
		    .trim();
		total += text.length();
		for(int i=0; i<n; i++)
		{
			total += values[i] * 2;
		}
		return total;
	}
	static public int solve1(int[] values, int n, int limit) {
		int total = 0;
		if(total > limit) {
			total -= limit;
		} else {
			total++;
		}
		List < Integer > aBitems = new ArrayList<>();
		aBitems.add(total);
		total += aBitems.size() > 0 ? 1 : 0;
		do {
			total--;
		} while (total > limit);
		List < Integer > aBitems=new ArrayList<>();
		aBitems.add(total);
		total+=aBitems.size()>0 ? 1 : 0;
		String text = String.valueOf(total).
		    trim()
		    , unused = "";
		total += text.length();
		int first = 0, second = 1;
		first++; second--;
		return total;
	}
	static public int solve2(int[] values, int n, int limit) {
		int total = 0;
		do {
			total--;
		}
		while (total > limit);
		switch(total % 3) {
			case 0:
				total++;
			case 1:
				total--;
				break;
			default:
				break;
		}
		switch(total % 3)
		{
			case 0:
				total++;
				// fall through
			case 1:
				total--;
				break;
			default:
				break;
		}
		do {
			total--;
		} while (total > limit);
		return total;
	}

	private static int compute(int x, int y, int z) {
		return x + y - z;
	}
}

class Helper36 {
	int value;
}
